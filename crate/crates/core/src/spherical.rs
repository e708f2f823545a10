//! Spherical parabolics: `Δ_I`, mixed normal forms `Δ^p·x₁⋯x_r`, the word
//! problem, and conjugacy by super summit sets.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::{CoxeterSystem, GenSet, WElement};
use crate::error::{Error, Result};
use crate::garside::Simple;
use crate::words::{Letter, Word};

/// `Δ_I^inf · factors`, with `Δ_I` not dividing the positive part.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MixedForm {
    pub inf: i64,
    pub factors: Vec<Simple>,
}

impl MixedForm {
    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }
}

/// Precomputed data of a spherical subset.
#[derive(Clone, Debug)]
pub struct Spherical {
    pub subset: GenSet,
    pub delta: WElement,
}

impl CoxeterSystem {
    pub fn spherical(&self, i: GenSet) -> Result<Spherical> {
        Ok(Spherical { subset: i, delta: self.longest_element(i)? })
    }

    /// `τ(x) = Δ⁻¹ x Δ` on simples.
    pub fn tau(&self, sp: &Spherical, x: &Simple) -> Simple {
        let d = &sp.delta;
        self.multiply(&self.multiply(d, x), d)
    }

    fn check_alphabet(&self, sp: &Spherical, b: &Word) -> Result<()> {
        if b.alphabet().is_subset(sp.subset) {
            Ok(())
        } else {
            Err(Error::Alphabet(alloc::format!(
                "word uses generators outside {{{}}}",
                self.format_subset(sp.subset)
            )))
        }
    }

    /// Builds the mixed form of `Δ^p · factors`.
    fn mixed_from_parts(&self, sp: &Spherical, p: i64, factors: &[Simple]) -> MixedForm {
        let nf = self.normalize(factors);
        let mut inf = p;
        let mut rest: &[Simple] = nf.factors();
        while rest.first() == Some(&sp.delta) {
            inf += 1;
            rest = &rest[1..];
        }
        MixedForm { inf, factors: rest.to_vec() }
    }

    pub fn mixed_form_in(&self, sp: &Spherical, b: &Word) -> Result<MixedForm> {
        self.check_alphabet(sp, b)?;
        // s⁻¹ = Δ⁻¹·(w₀ s); collect simples, then apply τ to each factor
        // once per Δ⁻¹ moved past it.
        let mut raw: Vec<Simple> = Vec::with_capacity(b.len());
        let mut later_neg: Vec<usize> = Vec::with_capacity(b.len());
        let mut p = 0i64;
        for l in b.letters() {
            let g = self.generator(l.gen);
            if l.inv {
                p -= 1;
                raw.push(self.multiply(&sp.delta, &g));
            } else {
                raw.push(g);
            }
            later_neg.push(0);
        }
        let mut count = 0usize;
        for k in (0..raw.len()).rev() {
            later_neg[k] = count;
            if b.letters()[k].inv {
                count += 1;
            }
        }
        let factors: Vec<Simple> = raw
            .iter()
            .zip(&later_neg)
            .map(|(x, &c)| if c % 2 == 1 { self.tau(sp, x) } else { x.clone() })
            .collect();
        Ok(self.mixed_from_parts(sp, p, &factors))
    }

    pub fn mixed_form(&self, i: GenSet, b: &Word) -> Result<MixedForm> {
        self.mixed_form_in(&self.spherical(i)?, b)
    }

    pub fn mixed_to_word(&self, sp: &Spherical, m: &MixedForm) -> Word {
        let delta = Word::lift(&sp.delta);
        let mut w = delta.pow(m.inf);
        for f in &m.factors {
            w = w.concat(&Word::lift(f));
        }
        w
    }

    pub fn spherical_equal(&self, i: GenSet, a: &Word, b: &Word) -> Result<bool> {
        let sp = self.spherical(i)?;
        Ok(self.mixed_form_in(&sp, a)? == self.mixed_form_in(&sp, b)?)
    }

    pub fn inf_sup(&self, i: GenSet, b: &Word) -> Result<(i64, i64)> {
        let m = self.mixed_form(i, b)?;
        Ok((m.inf, m.sup()))
    }

    /// `π_I(bΔ^i)` and `π_I(b)Δ_I^i`, with whether they are equal in `B_I`.
    pub fn retract_delta(&self, i: GenSet, b: &Word, k: i64) -> Result<(Word, Word, bool)> {
        let ambient = self.spherical(self.all())?;
        let local = self.spherical(i)?;
        let lhs = self.retract_word(i, &b.concat(&Word::lift(&ambient.delta).pow(k)));
        let rhs = self.retract_word(i, b).concat(&Word::lift(&local.delta).pow(k));
        let equal = self.mixed_form_in(&local, &lhs)? == self.mixed_form_in(&local, &rhs)?;
        Ok((lhs, rhs, equal))
    }

    /// `z⁻¹ x z` for a simple `z`.
    fn conjugate_mixed(&self, sp: &Spherical, x: &MixedForm, z: &Simple) -> MixedForm {
        // z⁻¹Δ^p = Δ^p τ^p(z)⁻¹ and u⁻¹ = Δ⁻¹·(w₀u⁻¹).
        let zp = if x.inf.rem_euclid(2) == 1 { self.tau(sp, z) } else { z.clone() };
        let y = self.multiply(&sp.delta, &self.inverse(&zp));
        let mut f = vec![y];
        f.extend(x.factors.iter().cloned());
        f.push(z.clone());
        self.mixed_from_parts(sp, x.inf - 1, &f)
    }

    fn cycling_conjugator(&self, sp: &Spherical, x: &MixedForm) -> Option<Word> {
        let f = x.factors.first()?;
        let z = if x.inf.rem_euclid(2) == 1 { self.tau(sp, f) } else { f.clone() };
        Some(Word::lift(&z))
    }

    fn decycling_conjugator(&self, x: &MixedForm) -> Option<Word> {
        x.factors.last().map(|f| Word::lift(f).inverse())
    }

    /// A super summit element conjugate to `x`, and a conjugator `c` with
    /// `c⁻¹ x c` equal to it.
    fn to_super_summit(&self, sp: &Spherical, x: &MixedForm) -> (MixedForm, Word) {
        let n = sp.delta.length();
        let mut cur = x.clone();
        let mut conj = Word::empty();
        let mut idle = 0;
        while idle < n {
            let Some(c) = self.cycling_conjugator(sp, &cur) else { break };
            let z = self.element(&c.gens());
            let next = self.conjugate_mixed(sp, &cur, &z);
            idle = if next.inf > cur.inf { 0 } else { idle + 1 };
            conj = conj.concat(&c);
            cur = next;
        }
        let mut idle = 0;
        while idle < n {
            let Some(c) = self.decycling_conjugator(&cur) else { break };
            // f_r·Δ^p f_1⋯f_r·f_r⁻¹ = Δ^p τ^p(f_r) f_1⋯f_{r-1}.
            let (last, init) = cur.factors.split_last().expect("decycling needs a factor");
            let moved = if cur.inf.rem_euclid(2) == 1 { self.tau(sp, last) } else { last.clone() };
            let mut f = vec![moved];
            f.extend(init.iter().cloned());
            let next = self.mixed_from_parts(sp, cur.inf, &f);
            idle = if next.sup() < cur.sup() { 0 } else { idle + 1 };
            conj = conj.concat(&c);
            cur = next;
        }
        (cur, conj)
    }

    /// All elements of `W_I` except the identity.
    fn nontrivial_simples(&self, i: GenSet) -> Vec<Simple> {
        let mut seen = alloc::collections::BTreeSet::new();
        let mut queue = VecDeque::from([WElement::identity()]);
        while let Some(w) = queue.pop_front() {
            if !seen.insert(w.clone()) {
                continue;
            }
            for s in i.iter() {
                let ws = self.multiply(&w, &self.generator(s));
                if ws.length() > w.length() {
                    queue.push_back(ws);
                }
            }
        }
        seen.into_iter().filter(|w| !w.is_identity()).collect()
    }

    /// The super summit set of `x`, with a conjugator from `x` to each member.
    pub fn super_summit_set(&self, sp: &Spherical, x: &MixedForm) -> BTreeMap<MixedForm, Word> {
        let (start, c0) = self.to_super_summit(sp, x);
        let simples = self.nontrivial_simples(sp.subset);
        let mut set = BTreeMap::new();
        set.insert(start.clone(), c0);
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(y) = queue.pop_front() {
            let cy = set[&y].clone();
            for z in &simples {
                let next = self.conjugate_mixed(sp, &y, z);
                if next.inf == start.inf && next.sup() == start.sup() && !set.contains_key(&next) {
                    set.insert(next.clone(), cy.concat(&Word::lift(z)));
                    queue.push_back(next);
                }
            }
        }
        set
    }

    /// A word `g` over `I^{±1}` with `g⁻¹ a g = b` in `B_I`, if one exists.
    pub fn spherical_conjugacy(&self, i: GenSet, a: &Word, b: &Word) -> Result<Option<Word>> {
        let sp = self.spherical(i)?;
        let ma = self.mixed_form_in(&sp, a)?;
        let mb = self.mixed_form_in(&sp, b)?;
        if a.exponent_sum() != b.exponent_sum() {
            return Ok(None);
        }
        let (sb, cb) = self.to_super_summit(&sp, &mb);
        let sss = self.super_summit_set(&sp, &ma);
        let Some(ca) = sss.get(&sb) else {
            return Ok(None);
        };
        let g = ca.concat(&cb.inverse()).free_reduce();
        let check = g.inverse().concat(a).concat(&g);
        if self.mixed_form_in(&sp, &check)? != mb {
            return Err(Error::OracleUnavailable(alloc::string::String::from("conjugator failed verification")));
        }
        Ok(Some(g))
    }
}

/// Local word and conjugacy oracles for subsets whose components are each
/// spherical or free (all labels `∞`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OracleKind {
    Spherical,
    Free,
}

/// Canonical key of an element of `B_I`, per component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKey {
    Spherical(MixedForm),
    Free(Word),
}

fn restrict(b: &Word, c: GenSet) -> Word {
    Word(b.letters().iter().copied().filter(|l| c.contains(l.gen)).collect())
}

fn cyclic_reduce(w: &Word) -> (Word, Word) {
    // Returns (core, x) with w = x·core·x⁻¹.
    let w = w.free_reduce();
    let l = w.letters();
    let mut k = 0;
    while k < l.len() / 2 && l[k] == l[l.len() - 1 - k].inverse() {
        k += 1;
    }
    (Word(l[k..l.len() - k].to_vec()), Word(l[..k].to_vec()))
}

impl CoxeterSystem {
    fn is_free(&self, c: GenSet) -> bool {
        c.iter().all(|s| c.iter().all(|t| s == t || self.m(s, t) == 0))
    }

    /// The kind of each component of `I`, if all have local oracles.
    pub fn component_kinds(&self, i: GenSet) -> Option<Vec<(GenSet, OracleKind)>> {
        self.components(i)
            .into_iter()
            .map(|c| {
                if self.is_finite_type(c) {
                    Some((c, OracleKind::Spherical))
                } else if self.is_free(c) {
                    Some((c, OracleKind::Free))
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn has_local_oracle(&self, i: GenSet) -> bool {
        self.component_kinds(i).is_some()
    }

    fn kinds_or_err(&self, i: GenSet) -> Result<Vec<(GenSet, OracleKind)>> {
        self.component_kinds(i).ok_or_else(|| {
            Error::OracleUnavailable(alloc::format!("no local oracle for {{{}}}", self.format_subset(i)))
        })
    }

    /// Canonical form of `b ∈ B_I`; equal keys iff equal elements.
    pub fn local_key(&self, i: GenSet, b: &Word) -> Result<Vec<ComponentKey>> {
        if !b.alphabet().is_subset(i) {
            return Err(Error::Alphabet(alloc::format!("word leaves {{{}}}", self.format_subset(i))));
        }
        self.kinds_or_err(i)?
            .into_iter()
            .map(|(c, kind)| {
                let part = restrict(b, c);
                Ok(match kind {
                    OracleKind::Spherical => ComponentKey::Spherical(self.mixed_form(c, &part)?),
                    OracleKind::Free => ComponentKey::Free(part.free_reduce()),
                })
            })
            .collect()
    }

    pub fn local_equal(&self, i: GenSet, a: &Word, b: &Word) -> Result<bool> {
        Ok(self.local_key(i, a)? == self.local_key(i, b)?)
    }

    /// A word `g` over `I^{±1}` with `g⁻¹ a g = b` in `B_I`, if one exists.
    pub fn local_conjugacy(&self, i: GenSet, a: &Word, b: &Word) -> Result<Option<Word>> {
        if !a.alphabet().union(b.alphabet()).is_subset(i) {
            return Err(Error::Alphabet(alloc::format!("word leaves {{{}}}", self.format_subset(i))));
        }
        let mut g = Word::empty();
        for (c, kind) in self.kinds_or_err(i)? {
            let (pa, pb) = (restrict(a, c), restrict(b, c));
            let part = match kind {
                OracleKind::Spherical => self.spherical_conjugacy(c, &pa, &pb)?,
                OracleKind::Free => free_conjugacy(&pa, &pb),
            };
            match part {
                Some(x) => g = g.concat(&x),
                None => return Ok(None),
            }
        }
        Ok(Some(g))
    }
}

/// Canonical key of a conjugacy class of `B_I`, per component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKey {
    /// Smallest element of the super summit set.
    Spherical(MixedForm),
    /// Smallest rotation of the cyclic reduction.
    Free(Word),
}

impl CoxeterSystem {
    /// Equal keys iff the elements are conjugate in `B_I`.
    pub fn conjugacy_key(&self, i: GenSet, b: &Word) -> Result<Vec<ClassKey>> {
        if !b.alphabet().is_subset(i) {
            return Err(Error::Alphabet(alloc::format!("word leaves {{{}}}", self.format_subset(i))));
        }
        self.kinds_or_err(i)?
            .into_iter()
            .map(|(c, kind)| {
                let part = restrict(b, c);
                Ok(match kind {
                    OracleKind::Spherical => {
                        let sp = self.spherical(c)?;
                        let m = self.mixed_form_in(&sp, &part)?;
                        let sss = self.super_summit_set(&sp, &m);
                        ClassKey::Spherical(sss.into_keys().next().expect("nonempty"))
                    }
                    OracleKind::Free => {
                        let (core, _) = cyclic_reduce(&part);
                        let n = core.len();
                        let best = (0..n.max(1))
                            .map(|k| {
                                let l = core.letters();
                                Word(l[k.min(n)..].iter().chain(&l[..k.min(n)]).copied().collect())
                            })
                            .min()
                            .expect("nonempty range");
                        ClassKey::Free(best)
                    }
                })
            })
            .collect()
    }
}

/// Membership test for one fixed conjugacy class of `B_I`.
pub struct ClassMatcher {
    subset: GenSet,
    parts: Vec<(GenSet, MatchPart)>,
}

enum MatchPart {
    Spherical(Spherical, alloc::collections::BTreeSet<MixedForm>),
    Free(Word),
}

impl CoxeterSystem {
    /// Prepares [`CoxeterSystem::in_class`] for the class of `b` in `B_I`;
    /// the super summit sets are computed once here.
    pub fn class_matcher(&self, i: GenSet, b: &Word) -> Result<ClassMatcher> {
        let keys = self.conjugacy_key(i, b)?;
        let mut parts = Vec::new();
        for ((c, kind), key) in self.kinds_or_err(i)?.into_iter().zip(keys) {
            parts.push((
                c,
                match (kind, key) {
                    (OracleKind::Spherical, _) => {
                        let sp = self.spherical(c)?;
                        let m = self.mixed_form_in(&sp, &restrict(b, c))?;
                        let sss = self.super_summit_set(&sp, &m).into_keys().collect();
                        MatchPart::Spherical(sp, sss)
                    }
                    (_, ClassKey::Free(w)) => MatchPart::Free(w),
                    (_, ClassKey::Spherical(_)) => unreachable!("kinds agree"),
                },
            ));
        }
        Ok(ClassMatcher { subset: i, parts })
    }

    /// Whether `w` is conjugate in `B_I` to the element the matcher was built from.
    pub fn in_class(&self, m: &ClassMatcher, w: &Word) -> Result<bool> {
        if !w.alphabet().is_subset(m.subset) {
            return Err(Error::Alphabet(alloc::format!("word leaves {{{}}}", self.format_subset(m.subset))));
        }
        for (c, part) in &m.parts {
            let pw = restrict(w, *c);
            let ok = match part {
                MatchPart::Spherical(sp, sss) => {
                    let x = self.mixed_form_in(sp, &pw)?;
                    sss.contains(&self.to_super_summit(sp, &x).0)
                }
                MatchPart::Free(key) => self.conjugacy_key(*c, &pw)? == alloc::vec![ClassKey::Free(key.clone())],
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Conjugacy in a free group: cyclic reductions agree up to rotation.
pub fn free_conjugacy(a: &Word, b: &Word) -> Option<Word> {
    let (ca, xa) = cyclic_reduce(a);
    let (cb, xb) = cyclic_reduce(b);
    if ca.len() != cb.len() {
        return None;
    }
    let n = ca.len();
    // a = xa·ca·xa⁻¹, b = xb·cb·xb⁻¹, cb = p⁻¹·ca·p with p = ca[..k].
    for k in 0..n.max(1) {
        let rotated: Vec<Letter> = ca.letters()[k..].iter().chain(&ca.letters()[..k]).copied().collect();
        if rotated == cb.letters() {
            let p = Word(ca.letters()[..k].to_vec());
            return Some(xa.concat(&p).concat(&xb.inverse()).free_reduce());
        }
    }
    None
}
