use std::collections::HashMap;

use super::root::GradedRoot;

/// Interns `(χ, sorted child codes)` pairs so that two vertices get the same
/// code exactly when their graded subtrees are isomorphic.
#[derive(Default)]
pub struct CanonicalCoder {
    table: HashMap<(i64, Vec<u32>), u32>,
}

impl CanonicalCoder {
    pub fn new() -> Self {
        Self::default()
    }

    fn intern(&mut self, chi: i64, mut kids: Vec<u32>) -> u32 {
        kids.sort_unstable();
        let next = self.table.len() as u32;
        *self.table.entry((chi, kids)).or_insert(next)
    }

    /// Code of the whole root, extended by a chain up to `level`.
    pub fn code_at(&mut self, root: &GradedRoot, level: i64) -> u32 {
        assert!(level >= root.truncation_level());
        let codes = self.vertex_codes(root);
        let mut code = codes[root.top_index()];
        for chi in root.truncation_level() + 1..=level {
            code = self.intern(chi, vec![code]);
        }
        code
    }

    /// Bottom-up code of every vertex, indexed like `root.vertices()`.
    pub fn vertex_codes(&mut self, root: &GradedRoot) -> Vec<u32> {
        let vs = root.vertices();
        let mut order: Vec<usize> = (0..vs.len()).collect();
        order.sort_by_key(|&i| vs[i].chi);
        let mut codes = vec![0u32; vs.len()];
        for i in order {
            let kids = root.children_of(i).iter().map(|&c| codes[c]).collect();
            codes[i] = self.intern(vs[i].chi, kids);
        }
        codes
    }
}

/// Whether a χ-preserving tree isomorphism exists. Roots stored with
/// different truncation levels are compared after extending the lower one
/// by its infinite chain.
pub fn roots_isomorphic(a: &GradedRoot, b: &GradedRoot) -> bool {
    let level = a.truncation_level().max(b.truncation_level());
    let mut coder = CanonicalCoder::new();
    coder.code_at(a, level) == coder.code_at(b, level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_root_pair;
    use crate::graded::root::Vertex;

    #[test]
    fn self_isomorphic() {
        let (l, r) = example_root_pair();
        assert!(roots_isomorphic(&l, &l));
        assert!(roots_isomorphic(&r, &r));
    }

    #[test]
    fn example_pair_not_isomorphic() {
        let (l, r) = example_root_pair();
        assert!(!roots_isomorphic(&l, &r));
    }

    #[test]
    fn relabeling_and_truncation_do_not_matter() {
        let v = |id, chi| Vertex { id, chi };
        let a =
            GradedRoot::new(vec![v(0, 0), v(1, -1), v(2, -1)], vec![(0, 1), (0, 2)], 0).unwrap();
        let b = GradedRoot::new(
            vec![v(7, -1), v(3, 2), v(5, 1), v(9, 0), v(4, -1)],
            vec![(3, 5), (5, 9), (9, 7), (4, 9)],
            2,
        )
        .unwrap();
        assert!(roots_isomorphic(&a, &b));
        let c = GradedRoot::new(vec![v(0, 0), v(1, -1)], vec![(0, 1)], 0).unwrap();
        assert!(!roots_isomorphic(&a, &c));
    }

    #[test]
    fn grading_matters() {
        let v = |id, chi| Vertex { id, chi };
        let a = GradedRoot::new(vec![v(0, 0), v(1, -1)], vec![(0, 1)], 0).unwrap();
        let b = GradedRoot::new(vec![v(0, 1), v(1, 0)], vec![(0, 1)], 1).unwrap();
        assert!(!roots_isomorphic(&a, &b));
    }
}
