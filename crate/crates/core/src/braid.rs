//! Braid-level retraction, tails, the `N⃗ ⋊ pr` morphism, support and a
//! three-valued equality in `B`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::coxeter::{CoxeterSystem, Gen, GenSet, ReflectionBag, Root, WElement};
use crate::error::{Error, Result};
use crate::rewrite::RewriteBound;
use crate::spherical::OracleKind;
use crate::words::{Letter, Word};

/// Outcome of an equality query in `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Equal,
    Distinct,
    Unknown,
}

/// What certified a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Decided inside `B_I` by local normal forms.
    Local { subset: GenSet, kinds: Vec<OracleKind> },
    /// Images in `W` differ.
    Projection,
    /// Exponent sums differ.
    ExponentSum,
    /// `N⃗` images differ.
    Nmap,
    /// Retractions to `B_J` differ.
    Retraction { subset: GenSet },
    /// Connected in the rewrite graph by this many steps.
    Rewrite { steps: usize },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equality {
    pub verdict: Verdict,
    pub certificate: Certificate,
}

/// Bounds for equality searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EqualityOptions {
    pub rewrite: RewriteBound,
    /// Largest subset size whose subsets are tried as separating retractions.
    pub max_separation_rank: usize,
}

impl Default for EqualityOptions {
    fn default() -> Self {
        EqualityOptions { rewrite: RewriteBound::default(), max_separation_rank: 10 }
    }
}

impl CoxeterSystem {
    /// `π_I(b)`.
    pub fn retract_braid(&self, i: GenSet, b: &Word) -> Word {
        self.retract_word(i, b)
    }

    /// `t_I(b) = π_I(b)⁻¹·b`, freely reduced.
    pub fn tail(&self, i: GenSet, b: &Word) -> Word {
        self.retract_word(i, b).inverse().concat(b).free_reduce()
    }

    /// `πʳ_I(b) = rev(π_I(rev b))`.
    pub fn retract_right(&self, i: GenSet, b: &Word) -> Word {
        self.retract_word(i, &b.rev()).rev()
    }

    /// `tʳ_I(b) = b·πʳ_I(b)⁻¹`, freely reduced.
    pub fn tail_right(&self, i: GenSet, b: &Word) -> Word {
        b.concat(&self.retract_right(i, b).inverse()).free_reduce()
    }

    /// `(N⃗(b), pr(b))`.
    pub fn nmap(&self, b: &Word) -> (ReflectionBag, WElement) {
        let mut a = self.identity_action();
        let mut bag = ReflectionBag::new();
        for l in b.letters() {
            bag.add(self.positive(&a.cols[l.gen as usize]), l.sign());
            self.action_push(&mut a, l.gen);
        }
        (bag, self.project(b))
    }

    /// `ʷN` for a bag `N`.
    pub fn act_on_bag(&self, w: &WElement, bag: &ReflectionBag) -> ReflectionBag {
        let mut out = ReflectionBag::new();
        for (r, k) in bag.iter() {
            out.add(self.positive(&self.act_on_root(w, r)), k);
        }
        out
    }

    /// The part of a bag supported on `T_I`.
    pub fn project_bag(&self, i: GenSet, bag: &ReflectionBag) -> ReflectionBag {
        let mut out = ReflectionBag::new();
        for (r, k) in bag.iter() {
            if r.support().is_subset(i) {
                out.add(r.clone(), k);
            }
        }
        out
    }

    /// `(N⃗ × pr)(π_I(b)) = (proj_{T_I} × π_I)(N⃗ × pr)(b)`.
    pub fn commutative_diagram_check(&self, i: GenSet, b: &Word) -> bool {
        let (lhs_bag, lhs_w) = self.nmap(&self.retract_word(i, b));
        let (bag, w) = self.nmap(b);
        let (pi, _) = self.coset_split_left(i, &w);
        lhs_bag == self.project_bag(i, &bag) && lhs_w == pi
    }

    pub fn is_pure(&self, b: &Word) -> bool {
        self.project(b).is_identity()
    }

    /// Three-valued equality in `B`, certified by the first route that
    /// decides it.
    pub fn braid_equal(&self, a: &Word, b: &Word, opts: EqualityOptions) -> Equality {
        let k = a.alphabet().union(b.alphabet());
        if let Some(kinds) = self.component_kinds(k) {
            let eq = self.local_equal(k, a, b).expect("alphabet inside subset");
            return Equality {
                verdict: if eq { Verdict::Equal } else { Verdict::Distinct },
                certificate: Certificate::Local { subset: k, kinds: kinds.into_iter().map(|x| x.1).collect() },
            };
        }
        let distinct = |certificate| Equality { verdict: Verdict::Distinct, certificate };
        if self.project(a) != self.project(b) {
            return distinct(Certificate::Projection);
        }
        if a.exponent_sum() != b.exponent_sum() {
            return distinct(Certificate::ExponentSum);
        }
        if self.nmap(a).0 != self.nmap(b).0 {
            return distinct(Certificate::Nmap);
        }
        if k.len() <= opts.max_separation_rank {
            for j in k.subsets() {
                if j == k || j.is_empty() || !self.has_local_oracle(j) {
                    continue;
                }
                let (ra, rb) = (self.retract_word(j, a), self.retract_word(j, b));
                if !self.local_equal(j, &ra, &rb).expect("retraction lies in B_J") {
                    return distinct(Certificate::Retraction { subset: j });
                }
            }
        }
        if let Some(steps) = self.rewrite_distance(a, b, opts.rewrite) {
            return Equality { verdict: Verdict::Equal, certificate: Certificate::Rewrite { steps } };
        }
        Equality { verdict: Verdict::Unknown, certificate: Certificate::None }
    }

    /// Equality where `Unknown` is an error.
    pub fn braid_equal_decided(&self, a: &Word, b: &Word, opts: EqualityOptions) -> Result<bool> {
        match self.braid_equal(a, b, opts).verdict {
            Verdict::Equal => Ok(true),
            Verdict::Distinct => Ok(false),
            Verdict::Unknown => Err(Error::OracleUnavailable(alloc::string::String::from("equality undecided"))),
        }
    }

    fn support_in_order(&self, b: &Word, order: &[Gen], opts: EqualityOptions) -> Result<GenSet> {
        let mut i = b.alphabet();
        for &s in order {
            if !i.contains(s) {
                continue;
            }
            let smaller = i.without(s);
            if self.braid_equal_decided(&self.retract_word(smaller, b), b, opts)? {
                i = smaller;
            }
        }
        Ok(i)
    }

    /// The smallest `I` with `b ∈ B_I`, by greedy removal of letters.
    pub fn support(&self, b: &Word, opts: EqualityOptions) -> Result<GenSet> {
        let order: Vec<Gen> = b.alphabet().iter().collect();
        let forward = self.support_in_order(b, &order, opts)?;
        let backward: Vec<Gen> = order.iter().rev().copied().collect();
        let other = self.support_in_order(b, &backward, opts)?;
        if forward != other {
            return Err(Error::OracleUnavailable(alloc::string::String::from("support depends on removal order")));
        }
        Ok(forward)
    }

    /// Words `𝐰 s² 𝐰⁻¹` with `ws` simple and `I`-reduced, `ℓ(w) ≤ bound`.
    pub fn generators_of_pure_preimage(&self, i: GenSet, bound: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut layer = alloc::vec![WElement::identity()];
        let mut seen: BTreeSet<WElement> = layer.iter().cloned().collect();
        for _ in 0..=bound {
            let mut next = Vec::new();
            for w in &layer {
                for s in 0..self.rank() as Gen {
                    let ws = self.multiply(w, &self.generator(s));
                    if ws.length() <= w.length() {
                        continue;
                    }
                    if self.is_left_reduced(i, &ws) {
                        let lift = Word::lift(w);
                        let sq = Word(alloc::vec![Letter::pos(s), Letter::pos(s)]);
                        out.push(lift.concat(&sq).concat(&lift.inverse()));
                    }
                    if seen.insert(ws.clone()) {
                        next.push(ws);
                    }
                }
            }
            layer = next;
        }
        out
    }

    /// Shortest word equal to `b`, by increasing-length search over the
    /// alphabet of `b` with a local oracle.
    pub fn length_s(&self, b: &Word) -> Result<Word> {
        let k = b.alphabet();
        let key = self.local_key(k, b)?;
        let letters: Vec<Letter> = k.iter().flat_map(|g| [Letter::pos(g), Letter::neg(g)]).collect();
        let mut layer = alloc::vec![Word::empty()];
        for _ in 0..=b.len() {
            for w in &layer {
                if self.local_key(k, w)? == key {
                    return Ok(w.clone());
                }
            }
            let mut next = Vec::new();
            for w in &layer {
                for &l in &letters {
                    if w.letters().last() == Some(&l.inverse()) {
                        continue;
                    }
                    let mut v = w.0.clone();
                    v.push(l);
                    next.push(Word(v));
                }
            }
            layer = next;
        }
        Ok(b.clone())
    }

    /// Roots of the bag with their reflections spelled as words.
    pub fn bag_reflections(&self, bag: &ReflectionBag) -> Vec<(WElement, i64)> {
        let mut v: Vec<(WElement, i64)> = bag.iter().map(|(r, k): (&Root, i64)| (self.reflection_of_root(r), k)).collect();
        v.sort();
        v
    }
}
