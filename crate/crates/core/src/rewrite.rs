//! The rewrite graph on words: braid moves and free cancellation/insertion.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::coxeter::{CoxeterSystem, Gen};
use crate::words::{Letter, Word};

/// The kind of a single rewrite step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    /// Replaces an alternating word `sts⋯` of length `m(s,t)` by `tst⋯`, all
    /// letters of one sign.
    Braid,
    /// Deletes a factor `x x⁻¹`.
    Cancel,
    /// Inserts a factor `x x⁻¹`.
    Insert,
}

/// A rewrite step at a position of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    pub pos: usize,
    pub result: Word,
}

/// Limits for rewrite-graph searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RewriteBound {
    /// Longest word allowed in the search.
    pub max_len: usize,
    /// Largest number of visited words.
    pub max_nodes: usize,
}

impl Default for RewriteBound {
    fn default() -> Self {
        RewriteBound { max_len: 12, max_nodes: 200_000 }
    }
}

impl CoxeterSystem {
    fn alternating(&self, l: &[Letter]) -> Option<(Gen, Gen)> {
        let (a, b) = (l[0], *l.get(1)?);
        if a.gen == b.gen || a.inv != b.inv {
            return None;
        }
        let m = self.m(a.gen, b.gen) as usize;
        if m != l.len() {
            return None;
        }
        let ok = l.iter().enumerate().all(|(i, x)| x.inv == a.inv && x.gen == if i % 2 == 0 { a.gen } else { b.gen });
        ok.then_some((a.gen, b.gen))
    }

    /// Braid moves and cancellations applicable to `w`.
    pub fn contracting_steps(&self, w: &Word) -> Vec<Step> {
        let l = w.letters();
        let mut out = Vec::new();
        for k in 0..l.len() {
            if k + 1 < l.len() && l[k + 1] == l[k].inverse() {
                let mut v = l[..k].to_vec();
                v.extend_from_slice(&l[k + 2..]);
                out.push(Step { kind: StepKind::Cancel, pos: k, result: Word(v) });
            }
            if k + 1 < l.len() {
                let m = self.m(l[k].gen, l[k + 1].gen) as usize;
                if m >= 2 && k + m <= l.len() {
                    if let Some((s, t)) = self.alternating(&l[k..k + m]) {
                        let inv = l[k].inv;
                        let mut v = l[..k].to_vec();
                        v.extend((0..m).map(|i| Letter { gen: if i % 2 == 0 { t } else { s }, inv }));
                        v.extend_from_slice(&l[k + m..]);
                        out.push(Step { kind: StepKind::Braid, pos: k, result: Word(v) });
                    }
                }
            }
        }
        out
    }

    /// Free insertions of `x x⁻¹` at every position.
    pub fn insertion_steps(&self, w: &Word) -> Vec<Step> {
        let l = w.letters();
        let mut out = Vec::new();
        for k in 0..=l.len() {
            for g in 0..self.rank() as Gen {
                for inv in [false, true] {
                    let x = Letter { gen: g, inv };
                    let mut v = l[..k].to_vec();
                    v.push(x);
                    v.push(x.inverse());
                    v.extend_from_slice(&l[k..]);
                    out.push(Step { kind: StepKind::Insert, pos: k, result: Word(v) });
                }
            }
        }
        out
    }

    pub fn rewrite_steps(&self, w: &Word) -> Vec<Step> {
        let mut s = self.contracting_steps(w);
        s.extend(self.insertion_steps(w));
        s
    }

    /// Whether `u` and `v` are equal or related by exactly one step, and
    /// which kind.
    pub fn one_step_relation(&self, u: &Word, v: &Word) -> Option<Option<StepKind>> {
        if u == v {
            return Some(None);
        }
        if let Some(step) = self.contracting_steps(u).into_iter().find(|s| s.result == *v) {
            return Some(Some(step.kind));
        }
        if self.contracting_steps(v).into_iter().any(|s| s.kind == StepKind::Cancel && s.result == *u) {
            return Some(Some(StepKind::Insert));
        }
        None
    }

    /// Bidirectional breadth-first search in the rewrite graph. Returns the
    /// distance from `a` to `b` when they are connected within `bound`.
    pub fn rewrite_distance(&self, a: &Word, b: &Word, bound: RewriteBound) -> Option<usize> {
        if a == b {
            return Some(0);
        }
        let max_len = bound.max_len.max(a.len()).max(b.len());
        let mut dist = [BTreeMap::new(), BTreeMap::new()];
        let mut queues = [VecDeque::new(), VecDeque::new()];
        dist[0].insert(a.clone(), 0usize);
        dist[1].insert(b.clone(), 0usize);
        queues[0].push_back(a.clone());
        queues[1].push_back(b.clone());
        let mut visited = 2usize;
        while !queues[0].is_empty() && !queues[1].is_empty() {
            let side = if queues[0].len() <= queues[1].len() { 0 } else { 1 };
            let layer = dist[side][queues[side].front().expect("nonempty")];
            while let Some(w) = queues[side].front() {
                if dist[side][w] != layer {
                    break;
                }
                let w = queues[side].pop_front().expect("nonempty");
                let d = dist[side][&w];
                for step in self.rewrite_steps(&w) {
                    if step.result.len() > max_len || dist[side].contains_key(&step.result) {
                        continue;
                    }
                    if let Some(&e) = dist[1 - side].get(&step.result) {
                        return Some(d + 1 + e);
                    }
                    visited += 1;
                    if visited > bound.max_nodes {
                        return None;
                    }
                    dist[side].insert(step.result.clone(), d + 1);
                    queues[side].push_back(step.result);
                }
            }
        }
        None
    }
}
