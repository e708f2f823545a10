//! Brute-force reference implementations. Everything here is deliberately
//! naive and shares as little as possible with the main algorithms, so the
//! two can be compared.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::braid::Verdict;
use crate::coxeter::{CoxeterSystem, Gen, GenSet, Root};
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Largest group the enumerator will build.
pub const MAX_ENUMERATION: usize = 200_000;

/// An element of `W_I` given by the images of the simple roots, together
/// with a reduced word found by breadth-first search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteElement {
    pub word: Vec<Gen>,
    pub images: Vec<Root>,
}

/// All of `W_I`, by breadth-first search on the matrices of the action.
pub struct BruteGroup {
    pub subset: GenSet,
    pub elements: Vec<BruteElement>,
    index: BTreeMap<Vec<Root>, usize>,
}

impl BruteGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn lookup(&self, images: &[Root]) -> Option<&BruteElement> {
        self.index.get(images).map(|&k| &self.elements[k])
    }

    pub fn longest(&self) -> &BruteElement {
        self.elements.last().expect("contains the identity")
    }
}

impl CoxeterSystem {
    fn apply_left(&self, s: Gen, images: &[Root]) -> Vec<Root> {
        images
            .iter()
            .map(|r| {
                let mut r = r.clone();
                self.reflect_simple(s, &mut r);
                r
            })
            .collect()
    }

    /// Images of the simple roots under the element spelled by `word`.
    pub fn brute_images(&self, word: &[Gen]) -> Vec<Root> {
        let mut images: Vec<Root> = (0..self.rank() as Gen).map(|s| self.simple_root(s)).collect();
        for &s in word.iter().rev() {
            images = self.apply_left(s, &images);
        }
        images
    }

    pub fn enumerate_w(&self, i: GenSet) -> Result<BruteGroup> {
        if !self.is_finite_type(i) {
            return Err(Error::NotSphericalType(self.format_subset(i)));
        }
        let start = self.brute_images(&[]);
        let mut index = BTreeMap::new();
        index.insert(start.clone(), 0usize);
        let mut elements = alloc::vec![BruteElement { word: Vec::new(), images: start }];
        let mut k = 0;
        while k < elements.len() {
            for s in i.iter() {
                let images = self.apply_left(s, &elements[k].images);
                if index.contains_key(&images) {
                    continue;
                }
                if elements.len() >= MAX_ENUMERATION {
                    return Err(Error::BoundExceeded(MAX_ENUMERATION));
                }
                let mut word = alloc::vec![s];
                word.extend_from_slice(&elements[k].word);
                index.insert(images.clone(), elements.len());
                elements.push(BruteElement { word, images });
            }
            k += 1;
        }
        Ok(BruteGroup { subset: i, elements, index })
    }

    /// `(π_I(w), t_I(w))` by scanning all `u ∈ W_I` for the shortest `u⁻¹w`;
    /// `whole` must be an enumeration of `W`.
    pub fn naive_coset_split(&self, whole: &BruteGroup, part: &BruteGroup, word: &[Gen]) -> (Vec<Gen>, Vec<Gen>) {
        let w = self.brute_images(word);
        let mut best: Option<(usize, Vec<Gen>, Vec<Gen>)> = None;
        for u in &part.elements {
            let mut img = w.clone();
            for &s in &u.word {
                img = self.apply_left(s, &img);
            }
            let tail = whole.lookup(&img).expect("W is enumerated");
            if best.as_ref().is_none_or(|b| tail.word.len() < b.0) {
                best = Some((tail.word.len(), u.word.clone(), tail.word.clone()));
            }
        }
        let (_, u, t) = best.expect("W_I contains the identity");
        (u, t)
    }

    /// `π_I(b)` letter by letter, recomputing the tail of each prefix from
    /// scratch.
    pub fn naive_retract(&self, whole: &BruteGroup, part: &BruteGroup, b: &Word) -> Word {
        let mut prefix: Vec<Gen> = Vec::new();
        let mut out = Vec::new();
        for &l in b.letters() {
            let (_, tail) = self.naive_coset_split(whole, part, &prefix);
            let image = &self.brute_images(&tail)[l.gen as usize];
            if let Some(r) = part.subset.iter().find(|&r| *image == self.simple_root(r)) {
                out.push(Letter { gen: r, inv: l.inv });
            }
            prefix.push(l.gen);
        }
        Word(out)
    }

    fn braid_rewrites(&self, w: &Word, out: &mut Vec<Word>) {
        let l = w.letters();
        for start in 0..l.len() {
            for end in start + 2..=l.len() {
                let block = &l[start..end];
                let (a, b) = (block[0], block[1]);
                if a.gen == b.gen || a.inv != b.inv || self.m(a.gen, b.gen) as usize != block.len() {
                    continue;
                }
                let alt = block.iter().enumerate().all(|(k, x)| x.inv == a.inv && x.gen == [a.gen, b.gen][k % 2]);
                if alt {
                    let mut v = l.to_vec();
                    for (k, x) in v[start..end].iter_mut().enumerate() {
                        x.gen = [b.gen, a.gen][k % 2];
                    }
                    out.push(Word(v));
                }
            }
        }
    }

    /// Equal when a plain breadth-first search over braid moves, free
    /// cancellations and insertions connects the words, else unknown.
    pub fn rewrite_equal(&self, a: &Word, b: &Word, max_len: usize, max_nodes: usize) -> Verdict {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(a.clone());
        queue.push_back(a.clone());
        let letters: Vec<Letter> = (0..self.rank() as Gen).flat_map(|g| [Letter::pos(g), Letter::neg(g)]).collect();
        while let Some(w) = queue.pop_front() {
            if w == *b {
                return Verdict::Equal;
            }
            let mut next = Vec::new();
            self.braid_rewrites(&w, &mut next);
            for k in 0..w.len().saturating_sub(1) {
                if w.0[k] == w.0[k + 1].inverse() {
                    let mut v = w.0.clone();
                    v.drain(k..k + 2);
                    next.push(Word(v));
                }
            }
            if w.len() + 2 <= max_len {
                for k in 0..=w.len() {
                    for &x in &letters {
                        let mut v = w.0.clone();
                        v.splice(k..k, [x, x.inverse()]);
                        next.push(Word(v));
                    }
                }
            }
            for v in next {
                if seen.len() >= max_nodes {
                    return Verdict::Unknown;
                }
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        Verdict::Unknown
    }
}

/// Naive positive monoid: an element is the set of positive words connected
/// to a given one by braid moves.
pub struct NaiveMonoid<'a> {
    sys: &'a CoxeterSystem,
    bound: usize,
    classes: BTreeMap<Vec<Gen>, BTreeSet<Vec<Gen>>>,
}

impl<'a> NaiveMonoid<'a> {
    /// Words longer than `bound` are refused.
    pub fn new(sys: &'a CoxeterSystem, bound: usize) -> NaiveMonoid<'a> {
        NaiveMonoid { sys, bound, classes: BTreeMap::new() }
    }

    /// Every positive word equal to `w`.
    pub fn class(&mut self, w: &[Gen]) -> Result<BTreeSet<Vec<Gen>>> {
        if w.len() > self.bound {
            return Err(Error::BoundExceeded(self.bound));
        }
        if let Some(c) = self.classes.get(w) {
            return Ok(c.clone());
        }
        let mut seen = BTreeSet::new();
        seen.insert(w.to_vec());
        let mut stack = alloc::vec![w.to_vec()];
        while let Some(x) = stack.pop() {
            let mut next = Vec::new();
            self.sys.braid_rewrites(&Word::positive(&x), &mut next);
            for y in next {
                let y = y.gens();
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        for x in &seen {
            self.classes.insert(x.clone(), seen.clone());
        }
        Ok(seen)
    }

    /// Lexicographically smallest word of the class.
    pub fn canonical(&mut self, w: &[Gen]) -> Result<Vec<Gen>> {
        Ok(self.class(w)?.into_iter().next().expect("nonempty"))
    }

    /// Canonical words of all left divisors.
    pub fn divisors(&mut self, w: &[Gen]) -> Result<BTreeSet<Vec<Gen>>> {
        let mut out = BTreeSet::new();
        for x in self.class(w)? {
            for k in 0..=x.len() {
                out.insert(self.canonical(&x[..k])?);
            }
        }
        Ok(out)
    }

    /// No word of the class repeats a letter twice in a row.
    pub fn is_simple(&mut self, w: &[Gen]) -> Result<bool> {
        Ok(self.class(w)?.iter().all(|x| x.windows(2).all(|p| p[0] != p[1])))
    }

    /// `x` with `w = d x`, for a left divisor `d`.
    pub fn quotient(&mut self, d: &[Gen], w: &[Gen]) -> Result<Option<Vec<Gen>>> {
        let d = self.canonical(d)?;
        for x in self.class(w)? {
            if x.len() >= d.len() && self.canonical(&x[..d.len()])? == d {
                return Ok(Some(self.canonical(&x[d.len()..])?));
            }
        }
        Ok(None)
    }

    /// Left-greedy normal form: repeatedly strip the longest simple divisor.
    pub fn normal_form(&mut self, w: &[Gen]) -> Result<Vec<Vec<Gen>>> {
        let mut rest = self.canonical(w)?;
        let mut out = Vec::new();
        while !rest.is_empty() {
            let mut head = Vec::new();
            for d in self.divisors(&rest)? {
                if d.len() > head.len() && self.is_simple(&d)? {
                    head = d;
                }
            }
            rest = self.quotient(&head, &rest)?.expect("head divides");
            out.push(head);
        }
        Ok(out)
    }

    /// The longest common left divisor.
    pub fn gcd(&mut self, a: &[Gen], b: &[Gen]) -> Result<Vec<Gen>> {
        let da = self.divisors(a)?;
        let db = self.divisors(b)?;
        Ok(da.intersection(&db).max_by_key(|d| d.len()).cloned().unwrap_or_default())
    }

    /// The shortest common right multiple of length at most `max_len`.
    pub fn lcm(&mut self, a: &[Gen], b: &[Gen], max_len: usize) -> Result<Option<Vec<Gen>>> {
        let gens: Vec<Gen> = (0..self.sys.rank() as Gen).collect();
        let b = self.canonical(b)?;
        let mut layer: BTreeSet<Vec<Gen>> = BTreeSet::new();
        layer.insert(self.canonical(a)?);
        for _ in a.len()..=max_len {
            for c in &layer {
                if self.divisors(c)?.contains(&b) {
                    return Ok(Some(c.clone()));
                }
            }
            let mut next = BTreeSet::new();
            for c in &layer {
                if c.len() >= max_len {
                    continue;
                }
                for &g in &gens {
                    let mut v = c.clone();
                    v.push(g);
                    next.insert(self.canonical(&v)?);
                }
            }
            layer = next;
        }
        Ok(None)
    }
}
