use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::iso::roots_isomorphic;
use super::root::{module_from_root, root_from_weight};
use crate::semigroup::enumerate_plane_branch_semigroups;
use crate::weight1d::weight_sequence;

/// Outcome of checking, over all branch semigroups up to a conductor bound,
/// whether equal modules always come with isomorphic roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub max_conductor: u64,
    pub semigroups_tested: usize,
    pub distinct_modules: usize,
    /// Pairs with the same module, isomorphic roots or not.
    pub module_equal_pairs: usize,
    /// Generator lists of module-equal pairs whose roots differ.
    pub counterexamples: Vec<(Vec<u64>, Vec<u64>)>,
}

pub fn conjecture_sweep(max_conductor: u64) -> SweepReport {
    let semigroups = enumerate_plane_branch_semigroups(max_conductor);
    let data: Vec<_> = semigroups
        .par_iter()
        .map(|s| {
            let root = root_from_weight(&weight_sequence(s.as_set()));
            let module = module_from_root(&root);
            (module, root)
        })
        .collect();
    let mut classes: BTreeMap<_, Vec<usize>> = BTreeMap::new();
    for (i, (module, _)) in data.iter().enumerate() {
        classes.entry(module.clone()).or_default().push(i);
    }
    let mut module_equal_pairs = 0;
    let mut counterexamples = Vec::new();
    for members in classes.values() {
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                module_equal_pairs += 1;
                if !roots_isomorphic(&data[i].1, &data[j].1) {
                    counterexamples.push((
                        semigroups[i].min_gens().to_vec(),
                        semigroups[j].min_gens().to_vec(),
                    ));
                }
            }
        }
    }
    counterexamples.sort();
    SweepReport {
        max_conductor,
        semigroups_tested: semigroups.len(),
        distinct_modules: classes.len(),
        module_equal_pairs,
        counterexamples,
    }
}
