//! Word graphs of the rows and columns of the 2D Fibonacci word, their
//! Cartesian and rooted products, and subword enumeration by root paths.
//!
//! Both line graphs are the factor DAWG of the 1D Fibonacci word with
//! set-valued labels. The rows graph reads `DCDDC...` with `D = {d,b}` and
//! `C = {c,a}`; the columns graph reads `D'BD'D'B...` with `D' = {d,c}` and
//! `B = {b,a}`. A label set is instantiated to a concrete letter only when a
//! subword is assembled from a path.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write};

use serde_json::json;

use crate::error::{Error, Result};
use crate::letter::{Alphabet1D, Letter, LetterSet};
use crate::word1d::{fib_index_above, fib_prefix, fib_usize, Numbering, Word1D};
use crate::word2d::Word2D;

/// Direction an edge advances in: along a row or down a column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    /// Horizontal edges (the rows graph).
    Rows,
    /// Vertical edges (the columns graph).
    Cols,
}

impl Orientation {
    /// Label of the frequent symbol: `{d,b}` for rows, `{d,c}` for columns.
    pub fn major(self) -> LetterSet {
        match self {
            Orientation::Rows => LetterSet::of(&[Letter::D, Letter::B]),
            Orientation::Cols => LetterSet::of(&[Letter::D, Letter::C]),
        }
    }

    /// Label of the rare symbol: `{c,a}` for rows, `{b,a}` for columns.
    pub fn minor(self) -> LetterSet {
        match self {
            Orientation::Rows => LetterSet::of(&[Letter::C, Letter::A]),
            Orientation::Cols => LetterSet::of(&[Letter::B, Letter::A]),
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Rows => "rows",
            Orientation::Cols => "cols",
        })
    }
}

/// Node identifiers printable in DOT and JSON output.
pub trait NodeName {
    fn node_name(&self) -> String;
}

impl NodeName for usize {
    fn node_name(&self) -> String {
        self.to_string()
    }
}

impl<A: NodeName, B: NodeName> NodeName for (A, B) {
    fn node_name(&self) -> String {
        format!("({},{})", self.0.node_name(), self.1.node_name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge<N> {
    pub from: N,
    pub to: N,
    pub label: LetterSet,
    pub axis: Orientation,
}

/// A rooted digraph with letter-set labels. Edges are kept sorted, so every
/// traversal and export is deterministic.
#[derive(Clone, Debug)]
pub struct LabeledDigraph<N: Ord> {
    nodes: BTreeSet<N>,
    edges: Vec<Edge<N>>,
    root: N,
    out: BTreeMap<N, Vec<usize>>,
}

impl<N: Ord + Clone> LabeledDigraph<N> {
    pub fn new(nodes: BTreeSet<N>, mut edges: Vec<Edge<N>>, root: N) -> LabeledDigraph<N> {
        edges.sort();
        edges.dedup();
        let mut out: BTreeMap<N, Vec<usize>> = BTreeMap::new();
        for (i, e) in edges.iter().enumerate() {
            out.entry(e.from.clone()).or_default().push(i);
        }
        LabeledDigraph {
            nodes,
            edges,
            root,
            out,
        }
    }

    pub fn nodes(&self) -> &BTreeSet<N> {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge<N>] {
        &self.edges
    }

    pub fn root(&self) -> &N {
        &self.root
    }

    pub fn out_edges<'a>(&'a self, node: &N) -> impl Iterator<Item = &'a Edge<N>> + 'a {
        self.out
            .get(node)
            .into_iter()
            .flat_map(move |ids| ids.iter().map(move |&i| &self.edges[i]))
    }

    /// Every path of exactly `len` edges along `axis` starting at `start`:
    /// the label sequence and the end node.
    pub fn paths_from(&self, start: &N, len: usize, axis: Orientation) -> Vec<(Vec<LetterSet>, N)> {
        let mut out = Vec::new();
        let mut labels = Vec::with_capacity(len);
        self.walk(start, len, axis, &mut labels, &mut out);
        out
    }

    fn walk(
        &self,
        node: &N,
        remaining: usize,
        axis: Orientation,
        labels: &mut Vec<LetterSet>,
        out: &mut Vec<(Vec<LetterSet>, N)>,
    ) {
        if remaining == 0 {
            out.push((labels.clone(), node.clone()));
            return;
        }
        for e in self.out_edges(node).filter(|e| e.axis == axis) {
            labels.push(e.label);
            self.walk(&e.to, remaining - 1, axis, labels, out);
            labels.pop();
        }
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm
        let mut indegree: BTreeMap<&N, usize> = self.nodes.iter().map(|n| (n, 0)).collect();
        for e in &self.edges {
            *indegree.entry(&e.to).or_default() += 1;
        }
        let mut ready: Vec<&N> = indegree
            .iter()
            .filter(|(_, &d)| d == 0)
            .map(|(n, _)| *n)
            .collect();
        let mut seen = 0;
        while let Some(n) = ready.pop() {
            seen += 1;
            for e in self.out_edges(n) {
                let d = indegree.get_mut(&e.to).unwrap();
                *d -= 1;
                if *d == 0 {
                    ready.push(&e.to);
                }
            }
        }
        seen == indegree.len()
    }

    pub fn all_reachable(&self) -> bool {
        let mut seen = BTreeSet::new();
        let mut stack = vec![&self.root];
        while let Some(n) = stack.pop() {
            if seen.insert(n) {
                stack.extend(self.out_edges(n).map(|e| &e.to));
            }
        }
        seen.len() == self.nodes.len()
    }

    pub fn contains_edge(&self, edge: &Edge<N>) -> bool {
        self.edges.binary_search(edge).is_ok()
    }
}

/// The factor DAWG of the rows word (`orientation = Rows`) or columns word,
/// truncated to carry every root path of length up to `max_len`.
///
/// Nodes are `0..=F(n+2)-1` with `n` minimal such that `F(n) > max_len + 1`,
/// numbering `F(0) = 1, F(1) = 2`. Node `F(m)-1` is first reached after
/// `F(m-2)` edges, so no path of length `max_len` leaves this range. Edges are the spine `i-1 -> i` labelled
/// with the `i`-th symbol, and shortcuts `F(i)-2 -> F(i+1)-1` labelled with
/// the major symbol for even `i` and the minor symbol for odd `i`.
pub fn build_line_dawg(orientation: Orientation, max_len: usize) -> LabeledDigraph<usize> {
    let n = fib_index_above(max_len.max(1) + 1, Numbering::F12);
    let last = fib_usize(n + 2, Numbering::F12) - 1;
    let symbols = fib_prefix(Alphabet1D::AB, last);
    let label_of = |l: Letter| {
        if l == Letter::A {
            orientation.major()
        } else {
            orientation.minor()
        }
    };
    let mut edges: Vec<Edge<usize>> = (1..=last)
        .map(|i| Edge {
            from: i - 1,
            to: i,
            label: label_of(symbols[i - 1]),
            axis: orientation,
        })
        .collect();
    for i in 1.. {
        let to = fib_usize(i + 1, Numbering::F12) - 1;
        if to > last {
            break;
        }
        let label = if i % 2 == 0 {
            orientation.major()
        } else {
            orientation.minor()
        };
        edges.push(Edge {
            from: fib_usize(i, Numbering::F12) - 2,
            to,
            label,
            axis: orientation,
        });
    }
    LabeledDigraph::new((0..=last).collect(), edges, 0)
}

/// `G □ H`: vertex set `V(G) x V(H)`; `(u,v) -> (u,v')` for every edge
/// `v -> v'` of `H` and `(u,v) -> (u',v)` for every edge `u -> u'` of `G`.
pub fn cartesian_product<A, B>(
    g: &LabeledDigraph<A>,
    h: &LabeledDigraph<B>,
) -> LabeledDigraph<(A, B)>
where
    A: Ord + Clone,
    B: Ord + Clone,
{
    let nodes: BTreeSet<(A, B)> = g
        .nodes()
        .iter()
        .flat_map(|u| h.nodes().iter().map(move |v| (u.clone(), v.clone())))
        .collect();
    let mut edges = Vec::new();
    for u in g.nodes() {
        for e in h.edges() {
            edges.push(Edge {
                from: (u.clone(), e.from.clone()),
                to: (u.clone(), e.to.clone()),
                label: e.label,
                axis: e.axis,
            });
        }
    }
    for v in h.nodes() {
        for e in g.edges() {
            edges.push(Edge {
                from: (e.from.clone(), v.clone()),
                to: (e.to.clone(), v.clone()),
                label: e.label,
                axis: e.axis,
            });
        }
    }
    LabeledDigraph::new(nodes, edges, (g.root().clone(), h.root().clone()))
}

/// `G ∘ H`: a copy of `H` hung from every vertex of `G`.
///
/// With `prune_root_copy` the copy hanging from `G`'s root is dropped; it is
/// unreachable by any path that starts with at least one edge of `G`.
pub fn rooted_product<A, B>(
    g: &LabeledDigraph<A>,
    h: &LabeledDigraph<B>,
    prune_root_copy: bool,
) -> LabeledDigraph<(A, B)>
where
    A: Ord + Clone,
    B: Ord + Clone,
{
    let h_root = h.root().clone();
    let keep = |u: &A| !(prune_root_copy && u == g.root());
    let mut nodes = BTreeSet::new();
    for u in g.nodes() {
        if keep(u) {
            nodes.extend(h.nodes().iter().map(|v| (u.clone(), v.clone())));
        } else {
            nodes.insert((u.clone(), h_root.clone()));
        }
    }
    let mut edges: Vec<Edge<(A, B)>> = g
        .edges()
        .iter()
        .map(|e| Edge {
            from: (e.from.clone(), h_root.clone()),
            to: (e.to.clone(), h_root.clone()),
            label: e.label,
            axis: e.axis,
        })
        .collect();
    for u in g.nodes().iter().filter(|u| keep(u)) {
        edges.extend(h.edges().iter().map(|e| Edge {
            from: (u.clone(), e.from.clone()),
            to: (u.clone(), e.to.clone()),
            label: e.label,
            axis: e.axis,
        }));
    }
    LabeledDigraph::new(nodes, edges, (g.root().clone(), h_root))
}

/// Which line graph the rooted product hangs the other from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductOrder {
    /// Rows graph first: a horizontal path spells the first row, then a
    /// vertical path spells the last column.
    RowsThenCols,
    /// Columns graph first: a vertical path spells the first column, then a
    /// horizontal path spells the last row.
    ColsThenRows,
}

/// Label sequences of a horizontal and a vertical path through the product.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PathPair {
    pub h_labels: Vec<LetterSet>,
    pub v_labels: Vec<LetterSet>,
    pub order: ProductOrder,
}

impl PartialOrd for ProductOrder {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProductOrder {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (*self as u8).cmp(&(*other as u8))
    }
}

/// Picks from each label the letter lying in `alphabet`.
fn instantiate(labels: &[LetterSet], alphabet: Alphabet1D) -> Option<Word1D> {
    let set = LetterSet::of(&[alphabet.first(), alphabet.second()]);
    labels
        .iter()
        .map(|l| l.intersect(set).single())
        .collect::<Option<Vec<_>>>()
        .map(Word1D::new)
}

/// Assembles the `(|last_col|, |first_row|)` subword whose first row is
/// `first_row` and whose last column is `last_col`. Row `i` repeats the first
/// row when `last_col[i]` equals the joint letter, otherwise it is the first
/// row carried to the other row alphabet.
pub fn subword_from_lines(first_row: &Word1D, last_col: &Word1D) -> Result<Word2D> {
    let (joint, top) = match (first_row.last(), last_col.first()) {
        (Some(j), Some(t)) => (j, t),
        _ => return Err(Error::EmptyWord),
    };
    if top != joint {
        return Err(Error::InconsistentJoint {
            expected: joint,
            found: top,
        });
    }
    check_line(first_row, Letter::row_alphabet, "first row")?;
    check_line(last_col, Letter::col_alphabet, "last column")?;
    let other = first_row.map(Letter::swap_row);
    let rows: Vec<Word1D> = last_col
        .letters()
        .iter()
        .map(|&l| {
            if l == joint {
                first_row.clone()
            } else {
                other.clone()
            }
        })
        .collect();
    Word2D::from_rows(&rows)
}

/// Column-first counterpart of [`subword_from_lines`]: first column and last row.
pub fn subword_from_lines_transposed(first_col: &Word1D, last_row: &Word1D) -> Result<Word2D> {
    let (joint, left) = match (first_col.last(), last_row.first()) {
        (Some(j), Some(l)) => (j, l),
        _ => return Err(Error::EmptyWord),
    };
    if left != joint {
        return Err(Error::InconsistentJoint {
            expected: joint,
            found: left,
        });
    }
    check_line(first_col, Letter::col_alphabet, "first column")?;
    check_line(last_row, Letter::row_alphabet, "last row")?;
    let other = first_col.map(Letter::swap_col);
    let cols: Vec<Word1D> = last_row
        .letters()
        .iter()
        .map(|&l| {
            if l == joint {
                first_col.clone()
            } else {
                other.clone()
            }
        })
        .collect();
    Ok(Word2D::from_rows(&cols)?.transpose())
}

fn check_line<T: PartialEq>(line: &Word1D, tag: impl Fn(Letter) -> T, what: &str) -> Result<()> {
    let first = tag(line.first().ok_or(Error::EmptyWord)?);
    if line.letters().iter().any(|&l| tag(l) != first) {
        return Err(Error::NotFibStructured(format!(
            "{what} `{line}` mixes alphabets"
        )));
    }
    Ok(())
}

/// All subwords spelled by a path pair: one per instantiation of the first
/// path whose joint letter opens a consistent instantiation of the second.
pub fn subword_from_path(p: &PathPair) -> Result<Vec<Word2D>> {
    let mut out = Vec::new();
    let mut mismatch = None;
    match p.order {
        ProductOrder::RowsThenCols => {
            for row_alph in [Alphabet1D::DC, Alphabet1D::BA] {
                let h = instantiate(&p.h_labels, row_alph).ok_or(Error::EmptyWord)?;
                let joint = h.last().ok_or(Error::EmptyWord)?;
                let v = instantiate(&p.v_labels, joint.col_alphabet().alphabet())
                    .ok_or(Error::EmptyWord)?;
                match subword_from_lines(&h, &v) {
                    Ok(w) => out.push(w),
                    Err(e @ Error::InconsistentJoint { .. }) => mismatch = Some(e),
                    Err(e) => return Err(e),
                }
            }
        }
        ProductOrder::ColsThenRows => {
            for col_alph in [Alphabet1D::DB, Alphabet1D::CA] {
                let v = instantiate(&p.v_labels, col_alph).ok_or(Error::EmptyWord)?;
                let joint = v.last().ok_or(Error::EmptyWord)?;
                let h = instantiate(&p.h_labels, joint.row_alphabet().alphabet())
                    .ok_or(Error::EmptyWord)?;
                match subword_from_lines_transposed(&v, &h) {
                    Ok(w) => out.push(w),
                    Err(e @ Error::InconsistentJoint { .. }) => mismatch = Some(e),
                    Err(e) => return Err(e),
                }
            }
        }
    }
    match (out.is_empty(), mismatch) {
        (true, Some(e)) => Err(e),
        _ => Ok(out),
    }
}

/// The word graph of the 2D word: the rooted product of the two line graphs,
/// sized for subwords of `k` rows and `l` columns.
pub fn build_grid_dawg(
    k: usize,
    l: usize,
    order: ProductOrder,
    prune_root_copy: bool,
) -> LabeledDigraph<(usize, usize)> {
    let rows = build_line_dawg(Orientation::Rows, l);
    let cols = build_line_dawg(Orientation::Cols, k);
    match order {
        ProductOrder::RowsThenCols => rooted_product(&rows, &cols, prune_root_copy),
        ProductOrder::ColsThenRows => rooted_product(&cols, &rows, prune_root_copy),
    }
}

/// Every path made of `l` horizontal then `k` vertical edges (or `k`
/// vertical then `l` horizontal for [`ProductOrder::ColsThenRows`]).
pub fn product_paths(
    g: &LabeledDigraph<(usize, usize)>,
    k: usize,
    l: usize,
    order: ProductOrder,
) -> Vec<PathPair> {
    let (first_axis, first_len, second_axis, second_len) = match order {
        ProductOrder::RowsThenCols => (Orientation::Rows, l, Orientation::Cols, k),
        ProductOrder::ColsThenRows => (Orientation::Cols, k, Orientation::Rows, l),
    };
    let mut out = Vec::new();
    for (first, end) in g.paths_from(g.root(), first_len, first_axis) {
        for (second, _) in g.paths_from(&end, second_len, second_axis) {
            let (h_labels, v_labels) = match order {
                ProductOrder::RowsThenCols => (first.clone(), second),
                ProductOrder::ColsThenRows => (second, first.clone()),
            };
            out.push(PathPair {
                h_labels,
                v_labels,
                order,
            });
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DawgOptions {
    pub order: ProductOrder,
    pub prune_root_copy: bool,
}

impl Default for DawgOptions {
    fn default() -> DawgOptions {
        DawgOptions {
            order: ProductOrder::RowsThenCols,
            prune_root_copy: true,
        }
    }
}

/// The subwords of size `(k, l)` read off root paths of the product graph.
pub fn enumerate_dawg(k: usize, l: usize) -> Result<BTreeSet<Word2D>> {
    enumerate_dawg_with(k, l, DawgOptions::default())
}

pub fn enumerate_dawg_with(k: usize, l: usize, opts: DawgOptions) -> Result<BTreeSet<Word2D>> {
    if k == 0 || l == 0 {
        return Err(Error::OutOfRange(format!(
            "subword size ({k},{l}) must be positive"
        )));
    }
    let g = build_grid_dawg(k, l, opts.order, opts.prune_root_copy);
    let mut out = BTreeSet::new();
    for p in product_paths(&g, k, l, opts.order) {
        out.extend(subword_from_path(&p)?);
    }
    Ok(out)
}

/// DOT rendering; label sets print as e.g. `d,b`.
pub fn export_dot<N: Ord + Clone + NodeName>(g: &LabeledDigraph<N>) -> String {
    let mut s = String::new();
    writeln!(s, "digraph dawg {{").unwrap();
    writeln!(s, "  rankdir=LR;").unwrap();
    writeln!(s, "  \"{}\" [shape=doublecircle];", g.root().node_name()).unwrap();
    for n in g.nodes().iter().filter(|n| *n != g.root()) {
        writeln!(s, "  \"{}\";", n.node_name()).unwrap();
    }
    for e in g.edges() {
        let style = match e.axis {
            Orientation::Rows => "solid",
            Orientation::Cols => "dashed",
        };
        writeln!(
            s,
            "  \"{}\" -> \"{}\" [label=\"{}\", style={}];",
            e.from.node_name(),
            e.to.node_name(),
            e.label,
            style
        )
        .unwrap();
    }
    writeln!(s, "}}").unwrap();
    s
}

/// `{"root": ..., "nodes": [...], "edges": [{"from", "to", "label", "axis"}]}`.
pub fn to_json<N: Ord + Clone + NodeName>(g: &LabeledDigraph<N>) -> serde_json::Value {
    json!({
        "root": g.root().node_name(),
        "nodes": g.nodes().iter().map(NodeName::node_name).collect::<Vec<_>>(),
        "edges": g.edges().iter().map(|e| json!({
            "from": e.from.node_name(),
            "to": e.to.node_name(),
            "label": e.label.to_string(),
            "axis": e.axis.to_string(),
        })).collect::<Vec<_>>(),
    })
}
