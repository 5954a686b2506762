//! Brute-force reference implementations, written without the library's
//! algorithms so the tests can compare against them.

#![allow(dead_code)]

use num_integer::Integer;

/// Membership in the monoid generated by `gens`, for `0 ≤ x < len`.
pub fn closure(gens: &[u64], len: usize) -> Vec<bool> {
    let mut member = vec![false; len];
    member[0] = true;
    for x in 1..len {
        member[x] = gens
            .iter()
            .any(|&g| g as usize <= x && member[x - g as usize]);
    }
    member
}

/// Conductor of `⟨gens⟩` (gcd 1 assumed): scan the membership table.
pub fn conductor(gens: &[u64]) -> u64 {
    let a = *gens.iter().min().unwrap();
    let b = *gens.iter().max().unwrap();
    let len = (a * b + b + 2) as usize;
    let member = closure(gens, len);
    (0..len)
        .rev()
        .find(|&x| !member[x])
        .map_or(0, |x| x as u64 + 1)
}

/// Minimal generators of the set with the given membership table.
pub fn minimal_generators(member: &[bool]) -> Vec<u64> {
    let positive: Vec<usize> = (1..member.len()).filter(|&x| member[x]).collect();
    positive
        .iter()
        .copied()
        .filter(|&x| !(1..x).any(|a| member[a] && member[x - a]))
        .map(|x| x as u64)
        .collect()
}

/// `#([0,ℓ) ∩ S) − #([0,ℓ) ∖ S)` by counting.
pub fn w0_by_count(member: impl Fn(u64) -> bool, l: u64) -> i64 {
    (0..l).map(|x| if member(x) { 1 } else { -1 }).sum()
}

/// Connected components of `{ℓ ∈ [0,c] : w(ℓ) ≤ n}` with unit segments of
/// weight `max` of their ends, by union-find.
pub fn components_1d(w: &[i64], n: i64) -> Vec<Vec<usize>> {
    let len = w.len();
    let mut parent: Vec<usize> = (0..len).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for l in 0..len.saturating_sub(1) {
        if w[l].max(w[l + 1]) <= n {
            let (a, b) = (find(&mut parent, l), find(&mut parent, l + 1));
            parent[a] = b;
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for l in 0..len {
        if w[l] <= n {
            let r = find(&mut parent, l);
            groups.entry(r).or_default().push(l);
        }
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

/// Plane-branch generator lists with conductor at most `bound`, by a plain
/// depth-first search over increasing generators; conductors come from the
/// membership table.
pub fn plane_branch_generator_lists(bound: u64) -> Vec<Vec<u64>> {
    fn dfs(gens: &mut Vec<u64>, l: u64, bound: u64, out: &mut Vec<Vec<u64>>) {
        if l == 1 {
            if conductor(gens) <= bound {
                out.push(gens.clone());
            }
            return;
        }
        let last = *gens.last().unwrap();
        let prev_l = if gens.len() == 1 {
            gens[0]
        } else {
            gens[..gens.len() - 1].iter().fold(0, |a, &b| a.gcd(&b))
        };
        let n_last = prev_l / l;
        // Every minimal generator of a semigroup with conductor c is below c + m.
        let limit = bound + gens[0];
        for beta in last + 1..limit {
            let l_new = l.gcd(&beta);
            if l_new == l {
                continue;
            }
            if gens.len() >= 2 && beta <= n_last * last {
                continue;
            }
            gens.push(beta);
            dfs(gens, l_new, bound, out);
            gens.pop();
        }
    }
    let mut out = vec![vec![1]];
    for beta0 in 2..=bound + 1 {
        dfs(&mut vec![beta0], beta0, bound, &mut out);
    }
    out.sort_by_key(|g| (conductor(g), g.clone()));
    out
}

/// `(rank, kernel rank)` of `H⁰(S_n)` from component counts: the rank is
/// the number of components of `S_n`; the kernel of restriction to
/// `S_{n−1}` is spanned by components of `S_n` with no point of weight
/// below `n`.
pub fn h0_profile_1d(w: &[i64], n: i64) -> (u64, u64) {
    let comps = components_1d(w, n);
    let newborn = comps
        .iter()
        .filter(|c| c.iter().all(|&l| w[l] >= n))
        .count();
    (comps.len() as u64, newborn as u64)
}
