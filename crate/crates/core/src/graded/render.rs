use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::root::GradedRoot;

const COLUMN_WIDTH: usize = 4;

/// Graphviz rendering with one `rank=same` group per level, higher χ on top.
pub fn to_dot(root: &GradedRoot) -> String {
    let vs = root.vertices();
    let mut by_level: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for v in vs {
        by_level.entry(v.chi).or_default().push(v.id);
    }
    let mut out = String::from("graph graded_root {\n  rankdir=TB;\n  node [shape=point];\n");
    for (chi, ids) in by_level.iter().rev() {
        write!(
            out,
            "  {{ rank=same; \"chi{chi}\" [shape=plaintext, label=\"{chi}\"];"
        )
        .unwrap();
        for id in ids {
            write!(out, " v{id};").unwrap();
        }
        out.push_str(" }\n");
    }
    let levels: Vec<i64> = by_level.keys().rev().copied().collect();
    for pair in levels.windows(2) {
        writeln!(
            out,
            "  \"chi{}\" -- \"chi{}\" [style=invis];",
            pair[0], pair[1]
        )
        .unwrap();
    }
    let mut edges: Vec<(usize, usize)> = root
        .edges()
        .iter()
        .map(|&(a, b)| {
            let chi = |id: usize| vs.iter().find(|v| v.id == id).unwrap().chi;
            if chi(a) > chi(b) {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    edges.sort_unstable();
    for (hi, lo) in edges {
        writeln!(out, "  v{hi} -- v{lo};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Text rendering, one row per level from the truncation level down.
///
/// A vertex is drawn as `o` above its first child; `+` marks where further
/// children hang below it.
pub fn to_ascii(root: &GradedRoot) -> String {
    let n = root.vertices().len();
    let mut column = vec![0usize; n];
    let mut next_leaf = 0usize;
    assign_columns(root, root.top_index(), &mut column, &mut next_leaf);

    let top = root.truncation_level();
    let bottom = root.min_chi();
    let width = next_leaf.max(1) * COLUMN_WIDTH;
    let mut rows: Vec<Vec<char>> = vec![vec![' '; width]; (top - bottom + 1) as usize];
    for (i, v) in root.vertices().iter().enumerate() {
        let row = &mut rows[(top - v.chi) as usize];
        let x = column[i] * COLUMN_WIDTH;
        row[x] = 'o';
        let kids = root.children_of(i);
        if let Some(&last) = kids.last() {
            let end = column[last] * COLUMN_WIDTH;
            for cell in row.iter_mut().take(end + 1).skip(x + 1) {
                *cell = '-';
            }
            for &k in &kids[1..] {
                row[column[k] * COLUMN_WIDTH] = '+';
            }
        }
    }
    let label_width = [top, bottom]
        .iter()
        .map(|l| l.to_string().len())
        .max()
        .unwrap();
    let mut out = String::new();
    for (k, row) in rows.iter().enumerate() {
        let chi = top - k as i64;
        let line: String = row.iter().collect();
        writeln!(out, "{chi:>label_width$} | {}", line.trim_end()).unwrap();
    }
    out
}

fn assign_columns(root: &GradedRoot, v: usize, column: &mut [usize], next_leaf: &mut usize) {
    let kids = root.children_of(v);
    if kids.is_empty() {
        column[v] = *next_leaf;
        *next_leaf += 1;
        return;
    }
    for &k in kids {
        assign_columns(root, k, column, next_leaf);
    }
    column[v] = column[kids[0]];
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_root_pair;

    #[test]
    fn ascii_layout_of_example_root() {
        let (left, _) = example_root_pair();
        let expected = concat!(
            " 2 | o\n",
            " 1 | o\n",
            " 0 | o-----------+\n",
            "-1 | o---+---+   o\n",
            "-2 | o   o   o   o\n",
        );
        assert_eq!(to_ascii(&left), expected);
    }

    #[test]
    fn dot_has_levels_and_edges() {
        let (_, right) = example_root_pair();
        let dot = to_dot(&right);
        assert!(dot.starts_with("graph graded_root {"));
        assert!(dot.contains("rank=same; \"chi-2\""));
        assert_eq!(dot.matches(" -- v").count(), right.edges().len());
    }
}
