//! Ordered vertex partitions and equitable refinement.
//!
//! Cells are contiguous ranges of `lab` and are named by their start
//! position. Everything refinement does depends only on cell positions,
//! sizes and neighbour counts, never on vertex labels, so isomorphic
//! inputs refine identically.

use std::collections::VecDeque;

use crate::graph::Graph;

const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// Running hash of the refinement history of one search node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Trace(u64);

impl Trace {
    pub(crate) fn new() -> Self {
        Trace(0xcbf2_9ce4_8422_2325)
    }

    fn mix(&mut self, x: usize) {
        self.0 = (self.0 ^ x as u64).wrapping_mul(FNV_PRIME);
        self.0 ^= self.0 >> 29;
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Partition {
    lab: Vec<usize>,
    pos: Vec<usize>,
    start_of: Vec<usize>,
    end: Vec<usize>,
    cells: usize,
}

impl Partition {
    /// Cells ordered by ascending colour, vertices ascending within a cell.
    pub(crate) fn from_colours(colours: &[usize]) -> Self {
        let n = colours.len();
        let mut lab: Vec<usize> = (0..n).collect();
        lab.sort_by_key(|&v| (colours[v], v));
        let mut pos = vec![0; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let mut start_of = vec![0; n];
        let mut end = vec![0; n];
        let mut cells = 0;
        let mut s = 0;
        while s < n {
            let mut e = s + 1;
            while e < n && colours[lab[e]] == colours[lab[s]] {
                e += 1;
            }
            for p in s..e {
                start_of[p] = s;
            }
            end[s] = e;
            cells += 1;
            s = e;
        }
        Partition { lab, pos, start_of, end, cells }
    }

    pub(crate) fn len(&self) -> usize {
        self.lab.len()
    }

    pub(crate) fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    pub(crate) fn lab(&self) -> &[usize] {
        &self.lab
    }

    pub(crate) fn cell(&self, start: usize) -> &[usize] {
        &self.lab[start..self.end[start]]
    }

    pub(crate) fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0;
        std::iter::from_fn(move || {
            (s < self.lab.len()).then(|| {
                let here = s;
                s = self.end[s];
                here
            })
        })
    }

    /// Smallest non-singleton cell, lowest start on ties.
    pub(crate) fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for s in self.cell_starts() {
            let size = self.end[s] - s;
            if size > 1 && best.is_none_or(|(_, b)| size < b) {
                best = Some((s, size));
            }
        }
        best.map(|(s, _)| s)
    }

    /// Splits `v` off the front of its cell and refines.
    pub(crate) fn individualize(&mut self, g: &Graph, v: usize, trace: &mut Trace) {
        let p = self.pos[v];
        let s = self.start_of[p];
        let e = self.end[s];
        debug_assert!(e - s > 1, "individualizing a singleton");
        let w = self.lab[s];
        self.lab.swap(s, p);
        self.pos[v] = s;
        self.pos[w] = p;
        for q in s + 1..e {
            self.start_of[q] = s + 1;
        }
        self.end[s] = s + 1;
        self.end[s + 1] = e;
        self.cells += 1;
        trace.mix(s);
        trace.mix(e - s);
        self.refine(g, &[s], trace);
    }

    /// Refines to the coarsest equitable partition finer than the current
    /// one, starting from the splitter cells in `splitters`.
    pub(crate) fn refine(&mut self, g: &Graph, splitters: &[usize], trace: &mut Trace) {
        let n = self.lab.len();
        let mut queue: VecDeque<usize> = splitters.iter().copied().collect();
        let mut queued = vec![false; n];
        for &s in splitters {
            queued[s] = true;
        }
        let mut count = vec![0usize; n];
        let mut touched: Vec<usize> = Vec::new();
        let mut touched_cells: Vec<usize> = Vec::new();
        while let Some(w) = queue.pop_front() {
            queued[w] = false;
            if self.is_discrete() {
                break;
            }
            for &x in &self.lab[w..self.end[w]] {
                for &y in g.neighbours(x) {
                    if count[y] == 0 {
                        touched.push(y);
                    }
                    count[y] += 1;
                }
            }
            touched_cells.clear();
            touched_cells.extend(touched.iter().map(|&y| self.start_of[self.pos[y]]));
            touched_cells.sort_unstable();
            touched_cells.dedup();
            for &c in &touched_cells {
                let e = self.end[c];
                if e - c == 1 {
                    continue;
                }
                self.lab[c..e].sort_by_key(|&v| count[v]);
                let first = count[self.lab[c]];
                if count[self.lab[e - 1]] == first {
                    continue;
                }
                let mut frags: Vec<(usize, usize)> = Vec::new();
                let mut f = c;
                for p in c + 1..=e {
                    if p == e || count[self.lab[p]] != count[self.lab[f]] {
                        frags.push((f, p));
                        f = p;
                    }
                }
                trace.mix(c);
                trace.mix(frags.len());
                for &(fs, fe) in &frags {
                    trace.mix(fe - fs);
                    trace.mix(count[self.lab[fs]]);
                    self.end[fs] = fe;
                    for p in fs..fe {
                        self.start_of[p] = fs;
                        self.pos[self.lab[p]] = p;
                    }
                }
                self.cells += frags.len() - 1;
                if queued[c] {
                    for &(fs, _) in &frags[1..] {
                        queued[fs] = true;
                        queue.push_back(fs);
                    }
                } else {
                    let mut largest = 0;
                    for (k, &(fs, fe)) in frags.iter().enumerate() {
                        if fe - fs > frags[largest].1 - frags[largest].0 {
                            largest = k;
                        }
                    }
                    for (k, &(fs, _)) in frags.iter().enumerate() {
                        if k != largest {
                            queued[fs] = true;
                            queue.push_back(fs);
                        }
                    }
                }
            }
            for &y in &touched {
                count[y] = 0;
            }
            touched.clear();
        }
        trace.mix(self.cells);
    }
}
