//! Breadth-first-search oracle for the Coxeter length: the closed
//! inversion formula must equal the graph distance from the identity in
//! the Cayley graph on `{t_1, s_1, ..., s_{n-1}}`.

use hyperoct::group::{group_elements, SignedPermutation};
use std::collections::HashMap;

/// Word-length table over the Cayley graph of `W_n`.
fn bfs_lengths(n: usize) -> HashMap<SignedPermutation, usize> {
    let mut gens = vec![SignedPermutation::sign_change(n, 1)];
    for i in 1..n {
        gens.push(SignedPermutation::adjacent_transposition(n, i));
    }
    let mut dist = HashMap::new();
    let mut frontier = vec![SignedPermutation::identity(n)];
    dist.insert(SignedPermutation::identity(n), 0usize);
    let mut level = 0usize;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let u = w.compose(g);
                if !dist.contains_key(&u) {
                    dist.insert(u.clone(), level);
                    next.push(u);
                }
            }
        }
        frontier = next;
    }
    dist
}

#[test]
fn closed_formula_equals_bfs_for_small_ranks() {
    for n in 1..=3 {
        let dist = bfs_lengths(n);
        let elems = group_elements(n).unwrap();
        assert_eq!(dist.len(), elems.len(), "BFS covered W_{n}");
        for w in &elems {
            assert_eq!(w.length(), dist[w], "length of {w} in W_{n}");
        }
    }
}

#[test]
fn closed_formula_spot_checked_at_larger_ranks() {
    // deterministic sample of 1000 elements each at n = 4, 5
    for n in [4usize, 5] {
        let dist = bfs_lengths(n);
        let elems = group_elements(n).unwrap();
        let mut state = 0x9e3779b97f4a7c15u64 ^ n as u64;
        for _ in 0..1000 {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let w = &elems[(state % elems.len() as u64) as usize];
            assert_eq!(w.length(), dist[w], "length of {w} in W_{n}");
        }
    }
}
