//! Signed words over `S^{±1}` and the word-level retraction `π̂_I`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::coxeter::{Action, CoxeterSystem, Gen, GenSet, Root, WElement};
use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Gen,
    pub inv: bool,
}

impl Letter {
    pub fn pos(gen: Gen) -> Letter {
        Letter { gen, inv: false }
    }

    pub fn neg(gen: Gen) -> Letter {
        Letter { gen, inv: true }
    }

    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn sign(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inv {
            write!(f, "{}'", self.gen)
        } else {
            write!(f, "{}", self.gen)
        }
    }
}

/// A word over `S^{±1}`. Words are never reduced implicitly.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn positive(gens: &[Gen]) -> Word {
        Word(gens.iter().map(|&g| Letter::pos(g)).collect())
    }

    pub fn lift(w: &WElement) -> Word {
        Word::positive(w.word())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| !l.inv)
    }

    pub fn gens(&self) -> Vec<Gen> {
        self.0.iter().map(|l| l.gen).collect()
    }

    /// The set of generators occurring in the word.
    pub fn alphabet(&self) -> GenSet {
        self.0.iter().map(|l| l.gen).collect()
    }

    /// Exponent sum `λ`.
    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|l| l.sign()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The group inverse: reversed with every letter inverted.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// The anti-automorphism fixing every generator.
    pub fn rev(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Every letter inverted, order kept.
    pub fn invert_letters(&self) -> Word {
        Word(self.0.iter().map(|l| l.inverse()).collect())
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::new();
        for _ in 0..k.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        Word(v)
    }

    /// Relabels generators through `map`.
    pub fn map_gens(&self, map: impl Fn(Gen) -> Gen) -> Word {
        Word(self.0.iter().map(|l| Letter { gen: map(l.gen), inv: l.inv }).collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A finite sequence of roots.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct RootSeq(pub Vec<Root>);

/// Per-index record of the good/bad scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractTrace {
    /// For each index, the emitted generator when the index is good.
    pub good: Vec<Option<Gen>>,
    /// `t_I(w_j)` after each prefix `j = 1..=k`.
    pub tails: Vec<WElement>,
}

/// Hypothesis under which a product formula for `π̂_I(b|b′)` is applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductCase {
    /// `pr(b) ∈ W_I`.
    InParabolic,
    /// `pr(b)` is an `I`-ribbon-`J`.
    Ribbon(GenSet),
    /// `pr(b)` is `I`-reduced-`J` and `b′` is a word over `J^{±1}`.
    ReducedJ(GenSet),
}

/// `π̂_I(b|b′) = left | right`, with the data of the case used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductRetraction {
    pub case: ProductCase,
    pub left: Word,
    pub right: Word,
    /// `J₁ = I^{pr(b)} ∩ J` in the reduced-`J` case.
    pub j1: Option<GenSet>,
    pub result: Word,
}

impl CoxeterSystem {
    /// Parses `s t^-1 s`; `e` or the empty string is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut out = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let (name, inv) = match tok.split_once('^') {
                None => (tok, false),
                Some((n, "-1")) => (n, true),
                Some((n, "1")) => (n, false),
                Some(_) => return Err(Error::Parse(format!("bad exponent in `{tok}`"))),
            };
            let gen = self.gen(name)?;
            out.push(Letter { gen, inv });
        }
        Ok(Word(out))
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "e".to_string();
        }
        w.0.iter()
            .map(|l| if l.inv { format!("{}^-1", self.name(l.gen)) } else { self.name(l.gen).to_string() })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// `pr(b)`.
    pub fn project(&self, b: &Word) -> WElement {
        self.element(&b.gens())
    }

    pub fn p_star(&self, b: &Word) -> RootSeq {
        RootSeq(
            b.0.iter()
                .map(|l| {
                    let r = self.simple_root(l.gen);
                    if l.inv {
                        r.neg()
                    } else {
                        r
                    }
                })
                .collect(),
        )
    }

    pub fn p_star_inv(&self, r: &RootSeq) -> Result<Word> {
        r.0.iter()
            .map(|root| match root.as_simple() {
                Some((g, true)) => Ok(Letter::pos(g)),
                Some((g, false)) => Ok(Letter::neg(g)),
                None => Err(Error::NotSimpleRoot),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Term `i` is `(s_{α₁}⋯s_{α_{i−1}})(α_i)`.
    pub fn vec_n(&self, r: &RootSeq) -> RootSeq {
        let mut out = Vec::with_capacity(r.0.len());
        for (i, alpha) in r.0.iter().enumerate() {
            let mut img = alpha.clone();
            for prev in r.0[..i].iter().rev() {
                img = self.reflect(prev, &img);
            }
            out.push(img);
        }
        RootSeq(out)
    }

    /// The product `s_{α₁}⋯s_{α_k}` applied to a root.
    pub fn prod_apply(&self, r: &RootSeq, beta: &Root) -> Root {
        r.0.iter().rev().fold(beta.clone(), |acc, a| self.reflect(a, &acc))
    }

    /// Keeps the terms whose support lies in `I`.
    pub fn filter_phi(&self, r: &RootSeq, i: GenSet) -> RootSeq {
        RootSeq(r.0.iter().filter(|x| x.support().is_subset(i)).cloned().collect())
    }

    /// `π̂_I(b)` by the root-sequence formula.
    pub fn retract_word_roots(&self, i: GenSet, b: &Word) -> Result<Word> {
        let n = self.vec_n(&self.p_star(b));
        let kept = self.filter_phi(&n, i);
        self.p_star_inv(&self.vec_n(&kept))
    }

    /// `π̂_I(b)` by the good/bad index scan, with its trace.
    pub fn retract_trace(&self, i: GenSet, b: &Word) -> (Word, RetractTrace) {
        // `t` is the action of t_I(w_{j−1}); `bad` spells it.
        let mut t: Action = self.identity_action();
        let mut bad: Vec<Gen> = Vec::new();
        let mut out = Vec::new();
        let mut trace = RetractTrace { good: Vec::new(), tails: Vec::new() };
        for l in &b.0 {
            let img = &t.cols[l.gen as usize];
            match img.as_simple() {
                Some((r, true)) if i.contains(r) => {
                    out.push(Letter { gen: r, inv: l.inv });
                    trace.good.push(Some(r));
                }
                _ => {
                    self.action_push(&mut t, l.gen);
                    bad.push(l.gen);
                    trace.good.push(None);
                }
            }
            trace.tails.push(self.element(&bad));
        }
        (Word(out), trace)
    }

    /// `π̂_I(b)`.
    pub fn retract_word(&self, i: GenSet, b: &Word) -> Word {
        self.retract_word_scan(i, b)
    }

    pub fn retract_word_scan(&self, i: GenSet, b: &Word) -> Word {
        let mut t: Action = self.identity_action();
        let mut out = Vec::new();
        for l in &b.0 {
            match t.cols[l.gen as usize].as_simple() {
                Some((r, true)) if i.contains(r) => out.push(Letter { gen: r, inv: l.inv }),
                _ => self.action_push(&mut t, l.gen),
            }
        }
        Word(out)
    }

    /// `π̂_I ∘ π̂_J = π̂_{I∩J}`, letter for letter.
    pub fn retract_transitivity_check(&self, i: GenSet, j: GenSet, b: &Word) -> bool {
        let lhs = self.retract_word(i, &self.retract_word(j, b));
        lhs == self.retract_word(i.intersection(j), b)
    }

    /// `φ_w` on words: `j^ε ↦ (w j w⁻¹)^ε`.
    pub fn apply_ribbon(&self, w: &WElement, b: &Word) -> Result<Word> {
        let mut out = Vec::with_capacity(b.len());
        for l in &b.0 {
            let c = self.conjugate_generator(w, l.gen);
            match c.word() {
                [g] => out.push(Letter { gen: *g, inv: l.inv }),
                _ => return Err(Error::CaseNotApplicable),
            }
        }
        Ok(Word(out))
    }

    /// `π̂_I(b|b′)` through the product formula selected by `case`.
    pub fn retract_product(&self, i: GenSet, b: &Word, b2: &Word, case: &ProductCase) -> Result<ProductRetraction> {
        let w = self.project(b);
        let left = self.retract_word(i, b);
        let (right, j1) = match case {
            ProductCase::InParabolic => {
                if !self.in_parabolic(i, &w) {
                    return Err(Error::CaseNotApplicable);
                }
                (self.retract_word(i, b2), None)
            }
            ProductCase::Ribbon(j) => {
                match self.ribbon_target(i, &w) {
                    Some((target, _)) if target == *j => {}
                    _ => return Err(Error::CaseNotApplicable),
                }
                (self.apply_ribbon(&w, &self.retract_word(*j, b2))?, None)
            }
            ProductCase::ReducedJ(j) => {
                if !b2.alphabet().is_subset(*j) {
                    return Err(Error::CaseNotApplicable);
                }
                let j1 = self.solomon_intersection(i, *j, &w).map_err(|_| Error::CaseNotApplicable)?;
                (self.apply_ribbon(&w, &self.retract_word(j1, b2))?, Some(j1))
            }
        };
        let result = left.concat(&right);
        debug_assert_eq!(result, self.retract_word(i, &b.concat(b2)));
        if result != self.retract_word(i, &b.concat(b2)) {
            return Err(Error::CaseNotApplicable);
        }
        Ok(ProductRetraction { case: case.clone(), left, right, j1, result })
    }

    /// `π̂_I(b|b′) = π̂_I(b) | p*⁻¹(vecN(vecN(^{t} p*(b′)) ∩ Φ_I))` with
    /// `t = t_I(pr(b))`.
    pub fn retract_suffix(&self, i: GenSet, b: &Word, b2: &Word) -> Result<Word> {
        let t = self.coset_tail_left(i, &self.project(b));
        let moved = RootSeq(self.p_star(b2).0.iter().map(|r| self.act_on_root(&t, r)).collect());
        let kept = self.filter_phi(&self.vec_n(&moved), i);
        let tail = self.p_star_inv(&self.vec_n(&kept))?;
        Ok(self.retract_word(i, b).concat(&tail))
    }

    /// A positive word is simple iff every term of `vecN(p*(b))` is positive.
    pub fn word_is_simple(&self, b: &Word) -> Result<bool> {
        if !b.is_positive() {
            return Err(Error::NotPositive);
        }
        let n = self.vec_n(&self.p_star(b));
        Ok(n.0.iter().all(|r| self.root_sign(r) > 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sys() -> CoxeterSystem {
        CoxeterSystem::type_a(2)
    }

    #[test]
    fn parse_and_format() {
        let a2 = sys();
        let w = a2.parse_word("s t^-1 s").unwrap();
        assert_eq!(w.0, vec![Letter::pos(0), Letter::neg(1), Letter::pos(0)]);
        assert_eq!(a2.format_word(&w), "s t^-1 s");
        assert_eq!(a2.parse_word("e").unwrap(), Word::empty());
        assert_eq!(a2.format_word(&Word::empty()), "e");
        assert!(a2.parse_word("q").is_err());
        assert!(a2.parse_word("s^2").is_err());
    }

    #[test]
    fn p_star_examples() {
        let a2 = sys();
        let r = a2.p_star(&a2.parse_word("s t^-1").unwrap());
        assert_eq!(r.0, vec![a2.simple_root(0), a2.simple_root(1).neg()]);
        assert_eq!(a2.p_star_inv(&RootSeq(vec![a2.simple_root(0).neg()])).unwrap(), a2.parse_word("s^-1").unwrap());
        let mut sum = a2.simple_root(0);
        a2.reflect_simple(1, &mut sum);
        assert_eq!(a2.p_star_inv(&RootSeq(vec![sum])), Err(Error::NotSimpleRoot));
    }

    #[test]
    fn vec_n_example() {
        let a2 = sys();
        let r = a2.vec_n(&RootSeq(vec![a2.simple_root(0), a2.simple_root(1)]));
        assert_eq!(a2.format_root(&r.0[1]), "a_s + a_t");
        assert_eq!(a2.vec_n(&r), RootSeq(vec![a2.simple_root(0), a2.simple_root(1)]));
        let f = a2.filter_phi(&RootSeq(vec![a2.simple_root(0), r.0[1].clone(), a2.simple_root(1)]), GenSet::singleton(0));
        assert_eq!(f.0, vec![a2.simple_root(0)]);
    }

    #[test]
    fn retract_examples() {
        let a2 = sys();
        let i = GenSet::singleton(0);
        for (input, expect) in [("t t s", "s"), ("s t s", "s"), ("t s t", "s"), ("s s^-1 s", "s s^-1 s"), ("t s", "e")] {
            let b = a2.parse_word(input).unwrap();
            let e = a2.parse_word(expect).unwrap();
            assert_eq!(a2.retract_word_scan(i, &b), e, "{input}");
            assert_eq!(a2.retract_word_roots(i, &b).unwrap(), e, "{input}");
        }
    }

    #[test]
    fn trace_tails_are_bad_letters() {
        let a2 = sys();
        let b = a2.parse_word("t t s t^-1 s").unwrap();
        let (_, trace) = a2.retract_trace(GenSet::singleton(0), &b);
        for (j, tail) in trace.tails.iter().enumerate() {
            let prefix = Word(b.0[..=j].to_vec());
            assert_eq!(*tail, a2.coset_tail_left(GenSet::singleton(0), &a2.project(&prefix)));
        }
    }

    #[test]
    fn product_cases() {
        let a2 = sys();
        let i = GenSet::singleton(0);
        let j = GenSet::singleton(1);
        let ts = a2.parse_word("t s").unwrap();
        let t = a2.parse_word("t").unwrap();
        let r = a2.retract_product(i, &ts, &t, &ProductCase::Ribbon(j)).unwrap();
        assert_eq!(r.result, a2.parse_word("s").unwrap());
        let r = a2.retract_product(i, &a2.parse_word("s s").unwrap(), &t, &ProductCase::InParabolic).unwrap();
        assert_eq!(r.left, a2.parse_word("s s").unwrap());
        assert_eq!(a2.retract_product(i, &t, &t, &ProductCase::InParabolic), Err(Error::CaseNotApplicable));
        let r = a2.retract_product(i, &ts, &t, &ProductCase::ReducedJ(j)).unwrap();
        assert_eq!(r.j1, Some(j));
    }

    #[test]
    fn simple_words() {
        let a2 = sys();
        assert_eq!(a2.word_is_simple(&a2.parse_word("s t").unwrap()), Ok(true));
        assert_eq!(a2.word_is_simple(&a2.parse_word("s s").unwrap()), Ok(false));
        assert_eq!(a2.word_is_simple(&Word::empty()), Ok(true));
        assert_eq!(a2.word_is_simple(&a2.parse_word("s^-1").unwrap()), Err(Error::NotPositive));
    }
}
