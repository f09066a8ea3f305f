//! Individualization-refinement search.
//!
//! [`search_automorphisms`] walks a first path to a discrete leaf, then
//! works upwards through its levels. At level `i` it asks, for each vertex
//! `c` of the target cell not yet known to be in the orbit of the base
//! point, whether some automorphism fixing the earlier base points maps the
//! base point to `c`. The answer comes from an exhaustive (trace-pruned)
//! search of the subtree below `c`. The orbit sizes along the base multiply
//! to the group order.
//!
//! [`canonical_labelling`] explores every leaf that survives trace and
//! automorphism pruning and keeps the least one.

use crate::graph::Graph;

use super::partition::{Partition, Trace};
use super::perm::Permutation;

pub(crate) struct SearchOutcome {
    pub generators: Vec<Permutation>,
    pub base: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
}

struct FirstPath {
    nodes: Vec<Partition>,
    traces: Vec<Trace>,
    leaf: Vec<usize>,
}

struct Searcher<'a> {
    g: &'a Graph,
    colours: &'a [usize],
    first: FirstPath,
}

fn orbit_of(point: usize, gens: &[Permutation], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut stack = vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Whether `v` is the least point of its orbit under `gens`.
fn least_in_orbit(v: usize, gens: &[&Permutation]) -> bool {
    if gens.is_empty() {
        return true;
    }
    let mut seen = vec![v];
    let mut k = 0;
    while k < seen.len() {
        let x = seen[k];
        k += 1;
        for g in gens {
            let y = g.apply(x);
            if y < v {
                return false;
            }
            if !seen.contains(&y) {
                seen.push(y);
            }
        }
    }
    true
}

fn preserves_colours(colours: &[usize], images: &[usize]) -> bool {
    images.iter().enumerate().all(|(i, &x)| colours[i] == colours[x])
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, colours: &'a [usize]) -> Self {
        let mut root = Partition::from_colours(colours);
        let mut trace = Trace::new();
        let starts: Vec<usize> = root.cell_starts().collect();
        root.refine(g, &starts, &mut trace);
        let mut nodes = Vec::new();
        let mut traces = vec![trace];
        let mut cur = root;
        while let Some(s) = cur.target_cell() {
            let v = *cur.cell(s).iter().min().unwrap();
            nodes.push(cur.clone());
            let mut t = trace;
            cur.individualize(g, v, &mut t);
            traces.push(t);
            trace = t;
        }
        let leaf = cur.lab().to_vec();
        Searcher { g, colours, first: FirstPath { nodes, traces, leaf } }
    }

    fn base(&self) -> Vec<usize> {
        // the individualized vertex at each level is the first point of the
        // node's target cell on the first path
        (0..self.first.nodes.len())
            .map(|lvl| self.first.leaf[self.first.nodes[lvl].target_cell().unwrap()])
            .collect()
    }

    fn leaf_map(&self, lab: &[usize]) -> Option<Permutation> {
        let mut images = vec![0; lab.len()];
        for (k, &v) in self.first.leaf.iter().enumerate() {
            images[v] = lab[k];
        }
        (preserves_colours(self.colours, &images) && self.g.is_automorphism(&images))
            .then(|| Permutation::from_images_unchecked(images))
    }

    /// Searches the subtree below `node` (at `depth`) after individualizing
    /// `v`, for a leaf equivalent to the first leaf.
    fn find_match(
        &self,
        node: &Partition,
        depth: usize,
        v: usize,
        prefix: &mut Vec<usize>,
        gens: &[Permutation],
    ) -> Option<Permutation> {
        let mut part = node.clone();
        let mut trace = self.first.traces[depth];
        part.individualize(self.g, v, &mut trace);
        if trace != self.first.traces[depth + 1] {
            return None;
        }
        if part.is_discrete() {
            return self.leaf_map(part.lab());
        }
        let s = part.target_cell()?;
        let mut cell = part.cell(s).to_vec();
        cell.sort_unstable();
        prefix.push(v);
        let fixing: Vec<&Permutation> = gens.iter().filter(|p| p.fixes_all(prefix)).collect();
        let mut found = None;
        for w in cell {
            if !least_in_orbit(w, &fixing) {
                continue;
            }
            if let Some(p) = self.find_match(&part, depth + 1, w, prefix, gens) {
                found = Some(p);
                break;
            }
        }
        prefix.pop();
        found
    }
}

/// Generators of the automorphism group of the vertex-coloured graph,
/// together with the first-path base and the orbit sizes along it.
pub(crate) fn search_automorphisms(g: &Graph, colours: &[usize]) -> SearchOutcome {
    let n = g.order();
    assert_eq!(colours.len(), n, "one colour per vertex");
    if n == 0 {
        return SearchOutcome { generators: Vec::new(), base: Vec::new(), orbit_sizes: Vec::new() };
    }
    let searcher = Searcher::new(g, colours);
    let base = searcher.base();
    let depth = base.len();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut orbit_sizes = vec![1; depth];
    for level in (0..depth).rev() {
        let node = &searcher.first.nodes[level];
        let mut cell = node.cell(node.target_cell().unwrap()).to_vec();
        cell.sort_unstable();
        let mut orbit = orbit_of(base[level], &gens, n);
        let mut prefix = base[..level].to_vec();
        for c in cell {
            if orbit[c] {
                continue;
            }
            if let Some(p) = searcher.find_match(node, level, c, &mut prefix, &gens) {
                debug_assert!(p.fixes_all(&base[..level]) && p.apply(base[level]) == c);
                gens.push(p);
                orbit = orbit_of(base[level], &gens, n);
            }
        }
        orbit_sizes[level] = orbit.iter().filter(|&&b| b).count();
    }
    SearchOutcome { generators: gens, base, orbit_sizes }
}

/// Adjacency bits of `g` under the labelling `lab` (position `k` holds the
/// vertex that becomes `k`), in graph6 column order.
fn leaf_code(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = lab.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut code = vec![0u64; bits.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        let row = g.row(lab[j]);
        for &li in &lab[..j] {
            if row[li / 64] >> (li % 64) & 1 == 1 {
                code[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    code
}

struct CanonState<'a> {
    g: &'a Graph,
    best_traces: Vec<Trace>,
    best_code: Vec<u64>,
    best_lab: Vec<usize>,
    automorphisms: Vec<Permutation>,
}

impl CanonState<'_> {
    fn visit(&mut self, part: Partition, traces: &mut Vec<Trace>, prefix: &mut Vec<usize>) {
        // Leaves are ordered by their trace sequence first; a node whose
        // trace prefix is already worse than the best leaf cannot win.
        if !self.best_lab.is_empty() {
            let d = traces.len();
            if traces[..] > self.best_traces[..d.min(self.best_traces.len())] {
                return;
            }
        }
        if part.is_discrete() {
            let code = leaf_code(self.g, part.lab());
            let better = self.best_lab.is_empty()
                || (traces.as_slice(), &code) < (self.best_traces.as_slice(), &self.best_code);
            if better {
                self.best_traces = traces.clone();
                self.best_code = code;
                self.best_lab = part.lab().to_vec();
            } else if *traces == self.best_traces && code == self.best_code {
                let mut images = vec![0; part.len()];
                for (k, &v) in self.best_lab.iter().enumerate() {
                    images[v] = part.lab()[k];
                }
                let p = Permutation::from_images_unchecked(images);
                if !p.is_identity() {
                    self.automorphisms.push(p);
                }
            }
            return;
        }
        let s = part.target_cell().unwrap();
        let mut cell = part.cell(s).to_vec();
        cell.sort_unstable();
        for v in cell {
            let fixing: Vec<&Permutation> =
                self.automorphisms.iter().filter(|p| p.fixes_all(prefix)).collect();
            if !least_in_orbit(v, &fixing) {
                continue;
            }
            let mut child = part.clone();
            let mut t = *traces.last().unwrap();
            child.individualize(self.g, v, &mut t);
            traces.push(t);
            prefix.push(v);
            self.visit(child, traces, prefix);
            prefix.pop();
            traces.pop();
        }
    }
}

/// Canonical relabelling: returns `lab` with `lab[k]` the vertex that
/// receives label `k`. Isomorphic graphs get identical relabelled graphs.
pub(crate) fn canonical_labelling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut root = Partition::from_colours(&vec![0; n]);
    let mut trace = Trace::new();
    root.refine(g, &[0], &mut trace);
    let mut state = CanonState {
        g,
        best_traces: Vec::new(),
        best_code: Vec::new(),
        best_lab: Vec::new(),
        automorphisms: Vec::new(),
    };
    state.visit(root, &mut vec![trace], &mut Vec::new());
    state.best_lab
}
