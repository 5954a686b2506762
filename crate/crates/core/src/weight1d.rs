//! The one-variable weight function `w₀(ℓ) = #([0,ℓ)∩S) − #([0,ℓ)∖S)` of a
//! cofinite set, its sublevel sets and its local minima.

use std::fmt::Write as _;

use crate::semigroup::CofiniteSet;

/// `w₀(0), …, w₀(c)` for a cofinite set `S` with conductor `c`.
///
/// Past the conductor every position is a member, so `w₀` climbs by one per
/// step and is not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSequence {
    values: Vec<i64>,
    set: CofiniteSet,
}

/// A connected component `[start, end]` of a sublevel set `S_n`.
///
/// When `reaches_conductor` is set the interval contains `c` and continues
/// past it up to `end = c + n − w₀(c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    pub start: u64,
    pub end: u64,
    pub reaches_conductor: bool,
}

impl Component {
    pub fn contains(&self, other: &Component) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn is_point(&self) -> bool {
        self.start == self.end
    }
}

/// Builds the sequence with the step rule `w₀(ℓ+1) = w₀(ℓ) ± 1`.
pub fn weight_sequence(set: &CofiniteSet) -> WeightSequence {
    let c = set.conductor();
    let mut values = Vec::with_capacity(c as usize + 1);
    let mut w = 0i64;
    values.push(w);
    for l in 0..c {
        w += if set.contains(l) { 1 } else { -1 };
        values.push(w);
    }
    WeightSequence {
        values,
        set: set.clone(),
    }
}

/// `w₀(ℓ)` by counting members and non-members of `[0, ℓ)` directly.
pub fn weight_by_count(set: &CofiniteSet, l: u64) -> i64 {
    let members = (0..l).filter(|&x| set.contains(x)).count() as i64;
    members - (l as i64 - members)
}

impl WeightSequence {
    pub fn conductor(&self) -> u64 {
        self.set.conductor()
    }

    pub fn set(&self) -> &CofiniteSet {
        &self.set
    }

    /// Stored values `w₀(0..=c)`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `w₀(ℓ)` for any `ℓ ≥ 0`.
    pub fn at(&self, l: u64) -> i64 {
        let c = self.conductor();
        if l <= c {
            self.values[l as usize]
        } else {
            self.values[c as usize] + (l - c) as i64
        }
    }

    /// Extended weight of the unit segment `[ℓ, ℓ+1]`.
    pub fn segment(&self, l: u64) -> i64 {
        self.at(l).max(self.at(l + 1))
    }

    pub fn min(&self) -> i64 {
        *self.values.iter().min().unwrap()
    }

    /// Components of `S_n`, ordered by left endpoint. Empty below `min w₀`.
    pub fn sublevel_components(&self, n: i64) -> Vec<Component> {
        let c = self.conductor();
        let mut out = Vec::new();
        let mut start: Option<u64> = None;
        for l in 0..=c {
            let inside = self.values[l as usize] <= n;
            match (inside, start) {
                (true, None) => start = Some(l),
                (false, Some(s)) => {
                    out.push(Component {
                        start: s,
                        end: l - 1,
                        reaches_conductor: false,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            let wc = self.values[c as usize];
            out.push(Component {
                start: s,
                end: c + (n - wc) as u64,
                reaches_conductor: true,
            });
        }
        out
    }

    /// Local minimum points with their weights: `ℓ = 0` and every `ℓ` with
    /// `w₀(ℓ−1) > w₀(ℓ) < w₀(ℓ+1)`.
    pub fn local_minima(&self) -> Vec<(u64, i64)> {
        let c = self.conductor();
        let mut out = vec![(0, self.at(0))];
        for l in 1..=c {
            let w = self.at(l);
            if self.at(l - 1) > w && w < self.at(l + 1) {
                out.push((l, w));
            }
        }
        out
    }

    /// The same points read off the set: `S ∩ ((ℤ∖S)+1)` together with 0.
    pub fn local_minima_by_membership(&self) -> Vec<(u64, i64)> {
        let c = self.conductor();
        let mut out = vec![(0, self.at(0))];
        for l in 1..=c {
            if self.set.contains(l) && !self.set.contains(l - 1) {
                out.push((l, self.at(l)));
            }
        }
        out
    }

    /// `w₀(ℓ) = w₀(c−ℓ)` for all `0 ≤ ℓ ≤ c`.
    pub fn is_gorenstein_symmetric(&self) -> bool {
        let v = &self.values;
        v.iter().eq(v.iter().rev())
    }

    /// Rows `position \t member \t w0` for `0 ≤ ℓ ≤ c`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("position\tmember\tw0\n");
        for (l, w) in self.values.iter().enumerate() {
            let member = u8::from(self.set.contains(l as u64));
            writeln!(out, "{l}\t{member}\t{w}").unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::NumericalSemigroup;

    fn seq(gens: &[u64]) -> WeightSequence {
        weight_sequence(NumericalSemigroup::from_generators(gens).unwrap().as_set())
    }

    #[test]
    fn naturals_is_identity() {
        let w = weight_sequence(&CofiniteSet::naturals());
        assert_eq!(w.values(), &[0]);
        for l in 0..10 {
            assert_eq!(w.at(l), l as i64);
        }
        assert_eq!(w.min(), 0);
        assert_eq!(w.local_minima(), vec![(0, 0)]);
        assert!(w.is_gorenstein_symmetric());
    }

    #[test]
    fn two_three_table() {
        let w = seq(&[2, 3]);
        assert_eq!(w.values(), &[0, 1, 0]);
        assert_eq!(w.local_minima(), vec![(0, 0), (2, 0)]);
        let comps = w.sublevel_components(0);
        assert_eq!(
            comps,
            vec![
                Component {
                    start: 0,
                    end: 0,
                    reaches_conductor: false
                },
                Component {
                    start: 2,
                    end: 2,
                    reaches_conductor: true
                },
            ]
        );
        assert!(w.sublevel_components(-1).is_empty());
    }

    #[test]
    fn eleven_fourteen_values() {
        let w = seq(&[11, 14]);
        assert_eq!(w.conductor(), 130);
        assert_eq!(w.at(55), -27);
        assert_eq!(w.at(58), -26);
    }

    #[test]
    fn step_rule_agrees_with_count() {
        let s = NumericalSemigroup::from_generators(&[6, 15, 31]).unwrap();
        let w = weight_sequence(s.as_set());
        for l in 0..=80 {
            assert_eq!(w.at(l), weight_by_count(s.as_set(), l));
        }
        assert_eq!(w.min(), -14);
        assert_eq!(w.at(30), -14);
    }

    #[test]
    fn six_fifteen_thirtyone_three_block_shape() {
        // S_n = {s_n,…,s_n+2k−2} ⊔ [s_n+2k, c−s_n−2k] ⊔ {…, c−s_n} with
        // k ∈ {0, 1}: three blocks where k = 1, a single interval where k = 0.
        let w = seq(&[6, 15, 31]);
        let c = w.conductor();
        let mut three_blocks = Vec::new();
        for n in -12..=0 {
            let comps = w.sublevel_components(n);
            let s = comps[0].start;
            match comps.len() {
                3 => {
                    assert!(comps[0].is_point());
                    assert_eq!((comps[1].start, comps[1].end), (s + 2, c - s - 2));
                    assert_eq!((comps[2].start, comps[2].end), (c - s, c - s));
                    assert_eq!(comps[2].reaches_conductor, n == 0);
                    three_blocks.push(n);
                }
                1 => assert_eq!(comps[0].end, c - s, "level {n}"),
                k => panic!("level {n} has {k} components"),
            }
        }
        assert_eq!(three_blocks, vec![-12, -11, -10, -9, -8, -4, 0]);
        assert_eq!(w.sublevel_components(-13).len(), 7);
        assert_eq!(w.sublevel_components(1).len(), 1);
    }

    #[test]
    fn local_minima_two_ways_four_eleven() {
        let w = seq(&[4, 11]);
        assert_eq!(w.local_minima(), w.local_minima_by_membership());
    }

    #[test]
    fn gorenstein_symmetry() {
        assert!(seq(&[4, 11]).is_gorenstein_symmetric());
        assert!(!seq(&[3, 4, 5]).is_gorenstein_symmetric());
    }

    #[test]
    fn tsv_rows() {
        let tsv = seq(&[2, 3]).to_tsv();
        assert_eq!(tsv, "position\tmember\tw0\n0\t1\t0\n1\t0\t1\n2\t1\t0\n");
    }
}
