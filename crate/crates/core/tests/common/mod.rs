//! Brute-force oracles that share no code with the library.

#![allow(dead_code)]

/// Strict order relation on `0..n` as an adjacency matrix.
pub type Relation = Vec<Vec<bool>>;

fn is_transitive(rel: &Relation) -> bool {
    let n = rel.len();
    (0..n).all(|a| (0..n).all(|b| !rel[a][b] || (0..n).all(|c| !rel[b][c] || rel[a][c])))
}

fn leq(rel: &Relation, a: usize, b: usize) -> bool {
    a == b || rel[a][b]
}

/// Least element of `set` under `rel`, if there is one.
fn least(rel: &Relation, set: &[usize]) -> Option<usize> {
    set.iter().copied().find(|&m| set.iter().all(|&s| leq(rel, m, s)))
}

pub fn is_lattice(rel: &Relation) -> bool {
    let n = rel.len();
    let all: Vec<usize> = (0..n).collect();
    if least(rel, &all).is_none() {
        return false;
    }
    for x in 0..n {
        for y in 0..n {
            let upper: Vec<usize> = (0..n).filter(|&u| leq(rel, x, u) && leq(rel, y, u)).collect();
            if least(rel, &upper).is_none() {
                return false;
            }
        }
    }
    // a finite poset with a bottom and all joins is a lattice
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest row-major encoding over all relabelings.
fn canonical(rel: &Relation, perms: &[Vec<usize>]) -> Vec<bool> {
    let n = rel.len();
    perms
        .iter()
        .map(|p| {
            let mut code = vec![false; n * n];
            for a in 0..n {
                for b in 0..n {
                    if rel[a][b] {
                        code[p[a] * n + p[b]] = true;
                    }
                }
            }
            code
        })
        .min()
        .unwrap()
}

/// Lattices on `n` elements up to isomorphism: every poset has a labeling
/// in which `a < b` implies `a < b` as integers, so strict upper-triangular
/// relations cover all isomorphism classes.
pub fn lattice_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut rel = vec![vec![false; n]; n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            rel[a][b] = mask >> i & 1 == 1;
        }
        if is_transitive(&rel) && is_lattice(&rel) {
            seen.insert(canonical(&rel, &perms));
        }
    }
    seen.len()
}

/// Order-preserving maps `J -> {1..|J|}` by filtering all `|J|^|J|` maps.
/// `below(z, w)` is the strict order on `J`.
pub fn natural_labeling_count(joins: &[usize], below: impl Fn(usize, usize) -> bool) -> usize {
    let k = joins.len();
    let mut count = 0;
    for code in 0..k.pow(k as u32) {
        let values: Vec<usize> = (0..k).map(|i| code / k.pow(i as u32) % k + 1).collect();
        let ok = (0..k).all(|i| {
            (0..k).all(|j| !below(joins[i], joins[j]) || values[i] <= values[j])
        });
        count += usize::from(ok);
    }
    count
}

/// Every maximal chain of `[x, y]` in the cover graph.
pub fn maximal_chains(upper: &[Vec<usize>], x: usize, y: usize) -> Vec<Vec<usize>> {
    if x == y {
        return vec![vec![y]];
    }
    let reaches = |from: usize| {
        let mut stack = vec![from];
        let mut seen = vec![false; upper.len()];
        while let Some(v) = stack.pop() {
            if v == y {
                return true;
            }
            for &w in &upper[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    };
    let mut out = Vec::new();
    for &c in &upper[x] {
        if reaches(c) {
            for mut tail in maximal_chains(upper, c, y) {
                tail.insert(0, x);
                out.push(tail);
            }
        }
    }
    out
}
