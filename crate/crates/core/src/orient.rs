//! Orientation propagation shared by simplicial complexes and polygonal maps.
//!
//! Cells are glued along codimension-one pieces ("hinges"). Each incidence
//! records the sign with which the cell's reference orientation induces an
//! orientation on the hinge. A coherent orientation assigns `±1` to every
//! cell so that the two induced orientations on every hinge cancel.

use std::collections::VecDeque;

/// Returns `Some(true)` if a coherent orientation exists, `Some(false)` if
/// propagation forces a conflict and `None` if some hinge does not have
/// exactly two incidences.
pub(crate) fn coherently_orientable<'a, I>(cells: usize, hinges: I) -> Option<bool>
where
    I: IntoIterator<Item = &'a [(usize, i8)]>,
{
    let mut adjacency: Vec<Vec<(usize, i8)>> = vec![Vec::new(); cells];
    for incidences in hinges {
        let [(c0, s0), (c1, s1)] = incidences else {
            return None;
        };
        // orient[c1] * s1 == -(orient[c0] * s0)  =>  orient[c1] = -orient[c0] * s0 * s1
        let relation = -s0 * s1;
        adjacency[*c0].push((*c1, relation));
        adjacency[*c1].push((*c0, relation));
    }
    let mut orientation = vec![0i8; cells];
    for start in 0..cells {
        if orientation[start] != 0 {
            continue;
        }
        orientation[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(cell) = queue.pop_front() {
            for &(next, relation) in &adjacency[cell] {
                let wanted = orientation[cell] * relation;
                if orientation[next] == 0 {
                    orientation[next] = wanted;
                    queue.push_back(next);
                } else if orientation[next] != wanted {
                    return Some(false);
                }
            }
        }
    }
    Some(true)
}
