//! Maximum cardinality bipartite matching (Hopcroft-Karp).

use std::collections::VecDeque;

const FREE: usize = usize::MAX;

/// Bipartite graph with `adj[u]` listing the right vertices adjacent to left
/// vertex `u`. Returns the size of a maximum matching.
pub(crate) fn max_matching(adj: &[Vec<usize>], right_count: usize) -> usize {
    let left_count = adj.len();
    let mut match_left = vec![FREE; left_count];
    let mut match_right = vec![FREE; right_count];
    let mut dist = vec![0usize; left_count];
    let mut size = 0;

    // Greedy warm start.
    for u in 0..left_count {
        if let Some(&v) = adj[u].iter().find(|&&v| match_right[v] == FREE) {
            match_left[u] = v;
            match_right[v] = u;
            size += 1;
        }
    }

    let mut queue = VecDeque::new();
    loop {
        // Layer the graph from all free left vertices.
        queue.clear();
        for u in 0..left_count {
            if match_left[u] == FREE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = match_right[v];
                if w == FREE {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            return size;
        }
        let mut next_edge = vec![0usize; left_count];
        for u in 0..left_count {
            if match_left[u] == FREE
                && augment(u, adj, &mut match_left, &mut match_right, &mut dist, &mut next_edge)
            {
                size += 1;
            }
        }
    }
}

/// Iterative DFS along layered edges from free left vertex `root`.
fn augment(
    root: usize,
    adj: &[Vec<usize>],
    match_left: &mut [usize],
    match_right: &mut [usize],
    dist: &mut [usize],
    next_edge: &mut [usize],
) -> bool {
    let mut stack = vec![root];
    while let Some(&u) = stack.last() {
        if next_edge[u] == adj[u].len() {
            dist[u] = usize::MAX;
            stack.pop();
            continue;
        }
        let v = adj[u][next_edge[u]];
        let w = match_right[v];
        if w == FREE {
            // Flip the path recorded on the stack.
            let mut v = v;
            while let Some(u) = stack.pop() {
                let prev = match_left[u];
                match_left[u] = v;
                match_right[v] = u;
                v = prev;
            }
            return true;
        }
        if dist[w] != usize::MAX && dist[w] == dist[u] + 1 {
            stack.push(w);
        } else {
            next_edge[u] += 1;
        }
    }
    false
}
