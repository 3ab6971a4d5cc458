//! Independent brute-force oracle: a graph has a transitive orientation iff
//! orienting every edge along some vertex ordering (earlier -> later) is
//! transitive, because a transitive orientation is a strict partial order
//! and any of its linear extensions reproduces it. The search backtracks
//! over orderings, pruning as soon as a placed vertex closes an
//! intransitive triple.
//!
//! This module deliberately shares nothing with the forcing recognizer.

use super::RecognizeError;
use crate::graph::Graph;

/// 9! orderings is the most the oracle will sweep.
pub const ORACLE_VERTEX_CAP: usize = 9;

pub fn brute_force_is_divisor(g: &Graph) -> Result<bool, RecognizeError> {
    let n = g.vertex_count();
    if n > ORACLE_VERTEX_CAP {
        return Err(RecognizeError::OracleCap { size: n, cap: ORACLE_VERTEX_CAP });
    }
    if n == 0 {
        return Ok(true);
    }
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.adjacent_ids(u, v)).collect())
        .collect();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    Ok(search(&adj, &mut order, &mut used))
}

fn search(adj: &[Vec<bool>], order: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let n = adj.len();
    if order.len() == n {
        return true;
    }
    for candidate in 0..n {
        if used[candidate] {
            continue;
        }
        if extends_transitively(adj, order, candidate) {
            order.push(candidate);
            used[candidate] = true;
            if search(adj, order, used) {
                return true;
            }
            order.pop();
            used[candidate] = false;
        }
    }
    false
}

/// Placing `candidate` after the current prefix keeps the orientation
/// transitive iff no i < j in the prefix has edges (o_i, o_j) and
/// (o_j, candidate) without (o_i, candidate).
fn extends_transitively(adj: &[Vec<bool>], order: &[usize], candidate: usize) -> bool {
    for j in 0..order.len() {
        if !adj[order[j]][candidate] {
            continue;
        }
        for i in 0..j {
            if adj[order[i]][order[j]] && !adj[order[i]][candidate] {
                return false;
            }
        }
    }
    true
}
