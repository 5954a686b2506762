//! Numerical semigroups, arbitrary cofinite subsets of ℕ, and the
//! generator structure theory of plane branches (gcd chain, partial
//! conductors, enumeration by conductor).

use bitvec::prelude::*;
use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("no generators")]
    NoGenerators,
    #[error("generator must be positive, got {0}")]
    ZeroGenerator(u64),
    #[error("not cofinite: gcd of generators is {0}")]
    NotCofinite(u64),
    #[error("0 must be a member of the set")]
    MissingZero,
    #[error("member {member} is not below the stated conductor {conductor}")]
    MemberAboveConductor { member: u64, conductor: u64 },
    #[error("not closed under addition: {a} + {b} = {} is missing", a + b)]
    NotClosed { a: u64, b: u64 },
}

/// A subset of ℕ containing 0 whose complement is finite.
///
/// Membership below the conductor is stored explicitly; every position at or
/// above the conductor is a member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CofiniteSet {
    members: BitVec<u64, Lsb0>,
    conductor: u64,
}

impl CofiniteSet {
    /// Builds the set `members_below ∪ [conductor, ∞)`.
    ///
    /// The stored conductor is normalized down to the smallest `c` with
    /// `[c, ∞)` inside the set, so `{0,1,2}` with conductor 3 becomes ℕ.
    pub fn new(members_below: &[u64], conductor: u64) -> Result<Self, SemigroupError> {
        let mut members = bitvec![u64, Lsb0; 0; conductor as usize];
        for &m in members_below {
            if m >= conductor {
                return Err(SemigroupError::MemberAboveConductor {
                    member: m,
                    conductor,
                });
            }
            members.set(m as usize, true);
        }
        if conductor > 0 && !members[0] {
            return Err(SemigroupError::MissingZero);
        }
        let mut c = conductor as usize;
        while c > 0 && members[c - 1] {
            c -= 1;
        }
        members.truncate(c);
        Ok(Self {
            members,
            conductor: c as u64,
        })
    }

    pub fn naturals() -> Self {
        Self {
            members: BitVec::new(),
            conductor: 0,
        }
    }

    #[inline]
    pub fn contains(&self, x: u64) -> bool {
        x >= self.conductor || self.members[x as usize]
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Number of non-members, all of which lie in `[0, c)`.
    pub fn gap_count(&self) -> u64 {
        self.members.count_zeros() as u64
    }

    pub fn members_below_conductor(&self) -> Vec<u64> {
        self.members.iter_ones().map(|i| i as u64).collect()
    }

    pub fn gaps(&self) -> Vec<u64> {
        self.members.iter_zeros().map(|i| i as u64).collect()
    }

    /// `ℓ ∈ S ⇔ c−1−ℓ ∉ S` for every `0 ≤ ℓ < c`.
    pub fn is_symmetric(&self) -> bool {
        let c = self.conductor;
        (0..c).all(|l| self.contains(l) != self.contains(c - 1 - l))
    }

    /// Exhaustive closure check on `[0, c]`; sums at or above `c` are members anyway.
    pub fn first_closure_violation(&self) -> Option<(u64, u64)> {
        let members = self.members_below_conductor();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i..] {
                if !self.contains(a + b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_additively_closed(&self) -> bool {
        self.first_closure_violation().is_none()
    }
}

/// A numerical semigroup with its basic invariants precomputed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    set: CofiniteSet,
    delta: u64,
    multiplicity: u64,
    min_gens: Vec<u64>,
}

impl NumericalSemigroup {
    /// Additive closure of `gens`.
    pub fn from_generators(gens: &[u64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::NoGenerators);
        }
        if let Some(&z) = gens.iter().find(|&&g| g == 0) {
            return Err(SemigroupError::ZeroGenerator(z));
        }
        let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(SemigroupError::NotCofinite(g));
        }
        let smallest = *gens.iter().min().unwrap() as usize;
        let mut sorted: Vec<usize> = gens.iter().map(|&x| x as usize).collect();
        sorted.sort_unstable();
        sorted.dedup();

        // Grow the membership table until `smallest` consecutive members
        // appear; from there on everything is reachable by adding `smallest`.
        let mut member: Vec<bool> = Vec::new();
        let mut run = 0usize;
        let mut x = 0usize;
        loop {
            let is_member = x == 0
                || sorted
                    .iter()
                    .take_while(|&&g| g <= x)
                    .any(|&g| member[x - g]);
            member.push(is_member);
            if is_member {
                run += 1;
                if run == smallest {
                    break;
                }
            } else {
                run = 0;
            }
            x += 1;
        }
        let conductor = (x + 1 - smallest) as u64;
        member.truncate(conductor as usize);
        let below: Vec<u64> = member
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i as u64)
            .collect();
        let set = CofiniteSet::new(&below, conductor)?;
        Ok(Self::from_closed_set(set))
    }

    /// Interprets an explicit cofinite set as a semigroup, checking closure
    /// unless `verify_closed` is false.
    pub fn from_members(
        members_below: &[u64],
        conductor: u64,
        verify_closed: bool,
    ) -> Result<Self, SemigroupError> {
        let set = CofiniteSet::new(members_below, conductor)?;
        if verify_closed {
            if let Some((a, b)) = set.first_closure_violation() {
                return Err(SemigroupError::NotClosed { a, b });
            }
        }
        Ok(Self::from_closed_set(set))
    }

    fn from_closed_set(set: CofiniteSet) -> Self {
        let c = set.conductor();
        let multiplicity = (1..).find(|&x| set.contains(x)).unwrap();
        let delta = set.gap_count();
        // Minimal generators are at most c + m (equality only for ℕ).
        let mut min_gens = Vec::new();
        for s in 1..=c + multiplicity {
            if !set.contains(s) {
                continue;
            }
            let decomposable =
                (multiplicity..=s / 2).any(|a| set.contains(a) && set.contains(s - a));
            if !decomposable {
                min_gens.push(s);
            }
        }
        Self {
            set,
            delta,
            multiplicity,
            min_gens,
        }
    }

    pub fn naturals() -> Self {
        Self::from_closed_set(CofiniteSet::naturals())
    }

    pub fn as_set(&self) -> &CofiniteSet {
        &self.set
    }

    pub fn contains(&self, x: u64) -> bool {
        self.set.contains(x)
    }

    pub fn conductor(&self) -> u64 {
        self.set.conductor()
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Sorted minimal generating set `β₀ < … < β_g`.
    pub fn min_gens(&self) -> &[u64] {
        &self.min_gens
    }

    /// Embedding dimension minus one, i.e. `g`.
    pub fn genus_index(&self) -> usize {
        self.min_gens.len() - 1
    }

    pub fn is_smooth(&self) -> bool {
        self.set.conductor() == 0
    }

    pub fn is_symmetric(&self) -> bool {
        self.set.is_symmetric()
    }

    /// The gcd chain of the minimal generators, if they satisfy the
    /// plane-branch conditions `l_g = 1`, `n_i ≥ 2` and `n_i β_i < β_{i+1}`.
    pub fn plane_branch_chain(&self) -> Option<GcdChain> {
        let chain = GcdChain::new(&self.min_gens);
        let ok = *chain.l.last().unwrap() == 1
            && chain.n.iter().all(|&n| n >= 2)
            && (0..self.min_gens.len() - 1)
                .all(|i| chain.n_at(i) * self.min_gens[i] < self.min_gens[i + 1]);
        ok.then_some(chain)
    }

    pub fn is_plane_branch(&self) -> bool {
        self.plane_branch_chain().is_some()
    }
}

impl AsRef<CofiniteSet> for NumericalSemigroup {
    fn as_ref(&self) -> &CofiniteSet {
        &self.set
    }
}

impl AsRef<CofiniteSet> for CofiniteSet {
    fn as_ref(&self) -> &CofiniteSet {
        self
    }
}

/// `l_i = gcd(β₀,…,β_i)`, `n_i = l_{i−1}/l_i` and the partial conductors
/// `c_i = c_{i−1} + (l_{i−1}−l_i)(β_i−l_i)/l_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdChain {
    pub l: Vec<u64>,
    /// `n_1 … n_g`; `n_0` is taken to be 1.
    pub n: Vec<u64>,
    pub partial_conductors: Vec<u64>,
}

impl GcdChain {
    /// Computes the chain for any sorted, nonempty list of positive integers.
    pub fn new(gens: &[u64]) -> Self {
        assert!(!gens.is_empty(), "gcd chain of an empty generator list");
        let mut l = vec![gens[0]];
        let mut n = Vec::new();
        let mut partial_conductors = vec![0];
        for (i, &beta) in gens.iter().enumerate().skip(1) {
            let prev = l[i - 1];
            let cur = prev.gcd(&beta);
            let c_prev = partial_conductors[i - 1];
            partial_conductors.push(c_prev + (prev - cur) * (beta - cur) / cur);
            n.push(prev / cur);
            l.push(cur);
        }
        Self {
            l,
            n,
            partial_conductors,
        }
    }

    /// `n_i`, with `n_0 = 1`.
    pub fn n_at(&self, i: usize) -> u64 {
        if i == 0 {
            1
        } else {
            self.n[i - 1]
        }
    }

    pub fn g(&self) -> usize {
        self.l.len() - 1
    }

    /// `l_{g−1}`; `None` for the smooth case `g = 0`.
    pub fn l_penultimate(&self) -> Option<u64> {
        let g = self.g();
        (g >= 1).then(|| self.l[g - 1])
    }

    pub fn conductor(&self) -> u64 {
        *self.partial_conductors.last().unwrap()
    }
}

/// Every plane-branch semigroup with conductor at most `max_conductor`,
/// sorted by `(c, min_gens)`.
pub fn enumerate_plane_branch_semigroups(max_conductor: u64) -> Vec<NumericalSemigroup> {
    let mut gen_lists: Vec<(u64, Vec<u64>)> = vec![(0, vec![1])];
    let mut beta0 = 2u64;
    // c ≥ c_1 ≥ β₁ − l₁ ≥ β₀ + 1 − β₀/2
    while beta0 + 1 - beta0 / 2 <= max_conductor {
        let mut gens = vec![beta0];
        extend_branch(&mut gens, beta0, 0, 1, max_conductor, &mut gen_lists);
        beta0 += 1;
    }
    gen_lists.sort();
    gen_lists
        .into_iter()
        .map(|(_, gens)| {
            NumericalSemigroup::from_generators(&gens).expect("branch generators are coprime")
        })
        .collect()
}

fn extend_branch(
    gens: &mut Vec<u64>,
    l_cur: u64,
    c_cur: u64,
    n_cur: u64,
    max_conductor: u64,
    out: &mut Vec<(u64, Vec<u64>)>,
) {
    if l_cur == 1 {
        out.push((c_cur, gens.clone()));
        return;
    }
    let last = *gens.last().unwrap();
    let mut beta = n_cur * last + 1;
    // The next term is (n−1)(β − l_next) ≥ β − l_cur/2.
    while c_cur + beta - l_cur / 2 <= max_conductor {
        let l_next = l_cur.gcd(&beta);
        if l_next < l_cur {
            let c_next = c_cur + (l_cur - l_next) * (beta - l_next) / l_next;
            if c_next <= max_conductor {
                gens.push(beta);
                extend_branch(gens, l_next, c_next, l_cur / l_next, max_conductor, out);
                gens.pop();
            }
        }
        beta += 1;
    }
}
