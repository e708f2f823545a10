//! Coxeter systems in the reflection representation.
//!
//! Elements of `W` are stored as their lexicographically smallest reduced
//! word. Roots live in the simple-root basis with exact coefficients.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Ring, Scalar};

/// Index of a generator in `S`.
pub type Gen = u8;

/// A subset of `S`, as a bitmask over generator indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(n: usize) -> GenSet {
        if n >= 64 {
            GenSet(u64::MAX)
        } else {
            GenSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(g: Gen) -> GenSet {
        GenSet(1u64 << g)
    }

    pub fn from_bits(bits: u64) -> GenSet {
        GenSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, g: Gen) -> bool {
        self.0 >> g & 1 == 1
    }

    pub fn with(self, g: Gen) -> GenSet {
        GenSet(self.0 | 1u64 << g)
    }

    pub fn without(self, g: Gen) -> GenSet {
        GenSet(self.0 & !(1u64 << g))
    }

    pub fn union(self, o: GenSet) -> GenSet {
        GenSet(self.0 | o.0)
    }

    pub fn intersection(self, o: GenSet) -> GenSet {
        GenSet(self.0 & o.0)
    }

    pub fn difference(self, o: GenSet) -> GenSet {
        GenSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: GenSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Gen> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let g = bits.trailing_zeros() as Gen;
            bits &= bits - 1;
            Some(g)
        })
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let full = self.0;
        let mut cur = Some(0u64);
        core::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full { None } else { Some((c.wrapping_sub(full)) & full) };
            Some(GenSet(c))
        })
    }
}

impl FromIterator<Gen> for GenSet {
    fn from_iter<T: IntoIterator<Item = Gen>>(iter: T) -> Self {
        iter.into_iter().fold(GenSet::EMPTY, GenSet::with)
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A vector in the span of the simple roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<Scalar>);

impl Root {
    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn coord(&self, s: Gen) -> &Scalar {
        &self.0[s as usize]
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(Scalar::neg).collect())
    }

    /// Generators whose coordinate is nonzero.
    pub fn support(&self) -> GenSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i as Gen)
            .collect()
    }

    /// The generator `s` if this is `±α_s`.
    pub fn as_simple(&self) -> Option<(Gen, bool)> {
        let supp = self.support();
        if supp.len() != 1 {
            return None;
        }
        let s = supp.iter().next()?;
        match self.0[s as usize].as_integer() {
            Some(1) => Some((s, true)),
            Some(-1) => Some((s, false)),
            _ => None,
        }
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// An element of `W`, kept as its lexicographically smallest reduced word.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WElement {
    word: Vec<Gen>,
}

impl WElement {
    pub fn identity() -> WElement {
        WElement { word: Vec::new() }
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn letters(&self) -> GenSet {
        self.word.iter().copied().collect()
    }
}

impl fmt::Debug for WElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{:?}", self.word)
    }
}

/// A finitely supported integer function on reflections, keyed by the
/// positive root of each reflection.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ReflectionBag {
    entries: BTreeMap<Root, i64>,
}

impl ReflectionBag {
    pub fn new() -> ReflectionBag {
        ReflectionBag::default()
    }

    pub fn add(&mut self, root: Root, k: i64) {
        use alloc::collections::btree_map::Entry;
        match self.entries.entry(root) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if k != 0 {
                    v.insert(k);
                }
            }
        }
    }

    pub fn get(&self, root: &Root) -> i64 {
        self.entries.get(root).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Root, i64)> {
        self.entries.iter().map(|(r, k)| (r, *k))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Roots with odd coefficient.
    pub fn mod2(&self) -> BTreeSet<Root> {
        self.entries.iter().filter(|(_, k)| *k % 2 != 0).map(|(r, _)| r.clone()).collect()
    }

    pub fn from_set(set: &BTreeSet<Root>) -> ReflectionBag {
        ReflectionBag { entries: set.iter().map(|r| (r.clone(), 1)).collect() }
    }
}

/// Columns `x(α_t)` of the linear action of an element `x`.
#[derive(Clone)]
pub(crate) struct Action {
    pub(crate) cols: Vec<Root>,
}

/// A Coxeter matrix with its exact reflection representation.
#[derive(Clone)]
pub struct CoxeterSystem {
    names: Vec<String>,
    m: Vec<u32>,
    ring: Ring,
    cartan: Vec<Scalar>,
    int_cartan: Option<Vec<i64>>,
}

const DEFAULT_NAMES: [&str; 7] = ["s", "t", "u", "v", "w", "x", "y"];

fn default_names(n: usize) -> Vec<String> {
    if n <= DEFAULT_NAMES.len() {
        DEFAULT_NAMES[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("s{i}")).collect()
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl CoxeterSystem {
    /// Builds a system from generator names and a Coxeter matrix in which
    /// `0` stands for `∞`.
    pub fn new(names: Vec<String>, matrix: Vec<Vec<u32>>) -> Result<CoxeterSystem> {
        let n = names.len();
        if n > 64 {
            return Err(Error::TooManyGenerators(n));
        }
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidMatrix(format!("expected a {n}x{n} matrix")));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            let ok = !name.is_empty()
                && name != "e"
                && name.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidMatrix(format!("bad generator name `{name}`")));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::InvalidMatrix(format!("duplicate generator `{name}`")));
            }
        }
        let mut level = 1u32;
        for i in 0..n {
            for j in 0..n {
                let v = matrix[i][j];
                if v != matrix[j][i] {
                    return Err(Error::InvalidMatrix(format!("not symmetric at ({i},{j})")));
                }
                if i == j && v != 1 {
                    return Err(Error::InvalidMatrix(format!("diagonal entry {i} is {v}")));
                }
                if i != j && v == 1 {
                    return Err(Error::InvalidMatrix(format!("off-diagonal entry ({i},{j}) is 1")));
                }
                if i != j && v >= 4 {
                    level = level / gcd(level, v) * v;
                }
            }
        }
        let ring = Ring::new(level);
        let mut cartan = Vec::with_capacity(n * n);
        for row in &matrix {
            for &v in row {
                let c = ring.two_cos_pi_over(v).expect("entry divides the level").neg();
                cartan.push(c);
            }
        }
        let int_cartan = cartan.iter().map(Scalar::as_integer).collect::<Option<Vec<i64>>>();
        let m = matrix.into_iter().flatten().collect();
        Ok(CoxeterSystem { names, m, ring, cartan, int_cartan })
    }

    pub fn with_default_names(matrix: Vec<Vec<u32>>) -> Result<CoxeterSystem> {
        CoxeterSystem::new(default_names(matrix.len()), matrix)
    }

    fn from_edges(n: usize, edges: &[(usize, usize, u32)]) -> CoxeterSystem {
        let mut m = vec![vec![2u32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(a, b, v) in edges {
            m[a][b] = v;
            m[b][a] = v;
        }
        CoxeterSystem::with_default_names(m).expect("well-formed matrix")
    }

    /// Type `A_n`, generators along a path.
    pub fn type_a(n: usize) -> CoxeterSystem {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i, 3)).collect();
        CoxeterSystem::from_edges(n, &edges)
    }

    /// Type `B_n`, with the label 4 on the first edge.
    pub fn type_b(n: usize) -> CoxeterSystem {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i, if i == 1 { 4 } else { 3 })).collect();
        CoxeterSystem::from_edges(n, &edges)
    }

    /// Dihedral type `I_2(m)`; `m = 0` gives the infinite dihedral group.
    pub fn dihedral(m: u32) -> CoxeterSystem {
        CoxeterSystem::from_edges(2, &[(0, 1, m)])
    }

    /// Affine type `Ã_n`: a cycle of `n + 1` generators, `n ≥ 2`.
    pub fn affine_a(n: usize) -> CoxeterSystem {
        let k = n + 1;
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k, 3)).collect();
        CoxeterSystem::from_edges(k, &edges)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn all(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g as usize]
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// `m(s,t)`, with `0` for `∞`.
    pub fn m(&self, s: Gen, t: Gen) -> u32 {
        self.m[s as usize * self.rank() + t as usize]
    }

    pub fn matrix(&self) -> Vec<Vec<u32>> {
        self.m.chunks(self.rank()).map(|r| r.to_vec()).collect()
    }

    /// `2B(α_s, α_t)`.
    pub fn cartan(&self, s: Gen, t: Gen) -> &Scalar {
        &self.cartan[s as usize * self.rank() + t as usize]
    }

    pub fn gen(&self, name: &str) -> Result<Gen> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as Gen)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Parses a comma-separated list of generator names.
    pub fn parse_subset(&self, text: &str) -> Result<GenSet> {
        let mut set = GenSet::EMPTY;
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            set = set.with(self.gen(tok)?);
        }
        Ok(set)
    }

    pub fn format_subset(&self, set: GenSet) -> String {
        set.iter().map(|g| self.name(g)).collect::<Vec<_>>().join(",")
    }

    pub fn format_element(&self, w: &WElement) -> String {
        if w.is_identity() {
            return "e".to_string();
        }
        w.word.iter().map(|&g| self.name(g)).collect::<Vec<_>>().join(" ")
    }

    pub fn format_root(&self, r: &Root) -> String {
        let parts: Vec<String> = r
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match c.as_integer() {
                Some(1) => format!("a_{}", self.names[i]),
                _ => format!("({c})a_{}", self.names[i]),
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// The simple root `α_s`.
    pub fn simple_root(&self, s: Gen) -> Root {
        let mut v = vec![self.ring.zero(); self.rank()];
        v[s as usize] = self.ring.one();
        Root(v)
    }

    /// `2B(α_s, β)`.
    fn pair_simple(&self, s: Gen, beta: &Root) -> Scalar {
        let n = self.rank();
        if let Some(ic) = &self.int_cartan {
            if self.ring.degree() == 1 {
                let mut acc = 0i64;
                for (u, c) in beta.0.iter().enumerate() {
                    let k = ic[s as usize * n + u];
                    if k != 0 {
                        acc = acc
                            .checked_add(k.checked_mul(c.coeffs()[0]).expect("root coefficient overflowed i64"))
                            .expect("root coefficient overflowed i64");
                    }
                }
                return self.ring.integer(acc);
            }
        }
        let mut acc = self.ring.zero();
        for (u, c) in beta.0.iter().enumerate() {
            let k = &self.cartan[s as usize * n + u];
            if !k.is_zero() && !c.is_zero() {
                self.ring.mul_add(&mut acc, k, c);
            }
        }
        acc
    }

    /// `2B(α, β)`.
    pub fn pairing(&self, alpha: &Root, beta: &Root) -> Scalar {
        let mut acc = self.ring.zero();
        for (s, a) in alpha.0.iter().enumerate() {
            if !a.is_zero() {
                let p = self.pair_simple(s as Gen, beta);
                self.ring.mul_add(&mut acc, a, &p);
            }
        }
        acc
    }

    /// Applies the simple reflection `s` in place.
    pub fn reflect_simple(&self, s: Gen, beta: &mut Root) {
        let p = self.pair_simple(s, beta);
        beta.0[s as usize].sub_assign(&p);
    }

    /// `s_α(β) = β − 2B(α,β)α`.
    pub fn reflect(&self, alpha: &Root, beta: &Root) -> Root {
        let p = self.pairing(alpha, beta);
        if p.is_zero() {
            return beta.clone();
        }
        let mut out = beta.clone();
        for (o, a) in out.0.iter_mut().zip(&alpha.0) {
            if !a.is_zero() {
                o.sub_assign(&self.ring.mul(&p, a));
            }
        }
        out
    }

    /// Sign of a root (+1 or −1), read from its first nonzero coordinate.
    pub fn root_sign(&self, r: &Root) -> i32 {
        r.0.iter()
            .find(|c| !c.is_zero())
            .map(|c| self.ring.sign(c))
            .unwrap_or(0)
    }

    /// Full coordinate check: `1` if all coordinates are `≥ 0`, `-1` if all
    /// are `≤ 0`, `0` for a mixed or zero vector.
    pub fn root_sign_checked(&self, r: &Root) -> i32 {
        let signs: Vec<i32> = r.0.iter().map(|c| self.ring.sign(c)).collect();
        if signs.iter().all(|&x| x >= 0) && signs.iter().any(|&x| x > 0) {
            1
        } else if signs.iter().all(|&x| x <= 0) && signs.iter().any(|&x| x < 0) {
            -1
        } else {
            0
        }
    }

    pub fn positive(&self, r: &Root) -> Root {
        if self.root_sign(r) < 0 {
            r.neg()
        } else {
            r.clone()
        }
    }

    pub(crate) fn identity_action(&self) -> Action {
        Action { cols: (0..self.rank() as Gen).map(|s| self.simple_root(s)).collect() }
    }

    /// `x ← x·s`.
    pub(crate) fn action_push(&self, a: &mut Action, s: Gen) {
        let col_s = a.cols[s as usize].clone();
        for t in 0..self.rank() {
            let c = self.cartan(s, t as Gen);
            if c.is_zero() {
                continue;
            }
            let col = &mut a.cols[t];
            if let Some(k) = c.as_integer() {
                for (o, v) in col.0.iter_mut().zip(&col_s.0) {
                    if !v.is_zero() {
                        o.sub_assign(&v.scale(k));
                    }
                }
            } else {
                for (o, v) in col.0.iter_mut().zip(&col_s.0) {
                    if !v.is_zero() {
                        o.sub_assign(&self.ring.mul(c, v));
                    }
                }
            }
        }
    }

    pub(crate) fn action_of(&self, word: &[Gen]) -> Action {
        let mut a = self.identity_action();
        for &s in word {
            self.action_push(&mut a, s);
        }
        a
    }

    /// Action of the inverse of the element spelled by `word`.
    pub(crate) fn inverse_action_of(&self, word: &[Gen]) -> Action {
        let mut a = self.identity_action();
        for &s in word.iter().rev() {
            self.action_push(&mut a, s);
        }
        a
    }

    /// Reads the canonical word of `x⁻¹` off the action of `x`, consuming it.
    fn extract(&self, mut a: Action, mut allowed: impl FnMut(Gen) -> bool) -> (Vec<Gen>, Action) {
        let mut out = Vec::new();
        loop {
            let s = (0..self.rank() as Gen).find(|&s| allowed(s) && self.root_sign(&a.cols[s as usize]) < 0);
            match s {
                Some(s) => {
                    out.push(s);
                    self.action_push(&mut a, s);
                }
                None => return (out, a),
            }
        }
    }

    /// The element spelled by an arbitrary word.
    pub fn element(&self, word: &[Gen]) -> WElement {
        let (w, _) = self.extract(self.inverse_action_of(word), |_| true);
        WElement { word: w }
    }

    pub fn generator(&self, s: Gen) -> WElement {
        WElement { word: vec![s] }
    }

    pub fn multiply(&self, a: &WElement, b: &WElement) -> WElement {
        let mut word = a.word.clone();
        word.extend_from_slice(&b.word);
        self.element(&word)
    }

    pub fn inverse(&self, w: &WElement) -> WElement {
        let rev: Vec<Gen> = w.word.iter().rev().copied().collect();
        self.element(&rev)
    }

    /// `w s w⁻¹` for a generator `s`.
    pub fn conjugate_generator(&self, w: &WElement, s: Gen) -> WElement {
        let mut word = w.word.clone();
        word.push(s);
        word.extend(w.word.iter().rev());
        self.element(&word)
    }

    pub fn act_on_root(&self, w: &WElement, r: &Root) -> Root {
        let mut out = r.clone();
        for &s in w.word.iter().rev() {
            self.reflect_simple(s, &mut out);
        }
        out
    }

    pub fn right_descents(&self, w: &WElement) -> GenSet {
        let a = self.action_of(&w.word);
        (0..self.rank() as Gen).filter(|&s| self.root_sign(&a.cols[s as usize]) < 0).collect()
    }

    pub fn left_descents(&self, w: &WElement) -> GenSet {
        let a = self.inverse_action_of(&w.word);
        (0..self.rank() as Gen).filter(|&s| self.root_sign(&a.cols[s as usize]) < 0).collect()
    }

    /// `w` has no left descent in `I`.
    pub fn is_left_reduced(&self, i: GenSet, w: &WElement) -> bool {
        self.left_descents(w).intersection(i).is_empty()
    }

    /// `w` has no right descent in `J`.
    pub fn is_right_reduced(&self, j: GenSet, w: &WElement) -> bool {
        self.right_descents(w).intersection(j).is_empty()
    }

    pub fn in_parabolic(&self, i: GenSet, w: &WElement) -> bool {
        w.letters().is_subset(i)
    }

    /// Inversion set `N(w)` as positive roots.
    pub fn inversion_set(&self, w: &WElement) -> BTreeSet<Root> {
        let mut a = self.identity_action();
        let mut out = BTreeSet::new();
        for &s in &w.word {
            out.insert(a.cols[s as usize].clone());
            self.action_push(&mut a, s);
        }
        out
    }

    /// `(π_I(w), t_I(w))` with `w = π_I(w)·t_I(w)`.
    pub fn coset_split_left(&self, i: GenSet, w: &WElement) -> (WElement, WElement) {
        let (head, rest) = self.extract(self.inverse_action_of(&w.word), |s| i.contains(s));
        let (tail, _) = self.extract(rest, |_| true);
        (self.element(&head), WElement { word: tail })
    }

    /// `t_I(w)`, the `I`-reduced element of `W_I·w`.
    pub fn coset_tail_left(&self, i: GenSet, w: &WElement) -> WElement {
        self.coset_split_left(i, w).1
    }

    /// `(u, j)` with `w = u·j`, `u` reduced-`J` and `j ∈ W_J`.
    pub fn coset_split_right(&self, j: GenSet, w: &WElement) -> (WElement, WElement) {
        let (ji, ui) = self.coset_split_left(j, &self.inverse(w));
        (self.inverse(&ui), self.inverse(&ji))
    }

    /// `w = i·d·j` with `d` the `I`-reduced-`J` element of `W_I w W_J`.
    pub fn i_reduced_j_decompose(&self, i: GenSet, j: GenSet, w: &WElement) -> (WElement, WElement, WElement) {
        let (pi, rest) = self.coset_split_left(i, w);
        let (d, pj) = self.coset_split_right(j, &rest);
        (pi, d, pj)
    }

    /// `J₁ = I^w ∩ J` for an `I`-reduced-`J` element `w`.
    pub fn solomon_intersection(&self, i: GenSet, j: GenSet, w: &WElement) -> Result<GenSet> {
        if !self.is_left_reduced(i, w) || !self.is_right_reduced(j, w) {
            return Err(Error::NotReduced);
        }
        let a = self.action_of(&w.word);
        Ok(j.iter()
            .filter(|&t| matches!(a.cols[t as usize].as_simple(), Some((r, true)) if i.contains(r)))
            .collect())
    }

    /// For an `I`-ribbon `w`, returns `J = I^w` and the pairs `(j, φ_w(j))`.
    pub fn ribbon_target(&self, i: GenSet, w: &WElement) -> Option<(GenSet, Vec<(Gen, Gen)>)> {
        if !self.is_left_reduced(i, w) {
            return None;
        }
        let a = self.inverse_action_of(&w.word);
        let mut pairs = Vec::new();
        for s in i.iter() {
            match a.cols[s as usize].as_simple() {
                Some((t, true)) => pairs.push((t, s)),
                _ => return None,
            }
        }
        pairs.sort();
        Some((pairs.iter().map(|p| p.0).collect(), pairs))
    }

    fn neighbours(&self, i: GenSet, s: Gen) -> impl Iterator<Item = Gen> + '_ {
        i.iter().filter(move |&t| t != s && self.m(s, t) != 2)
    }

    /// Connected components of the Coxeter diagram restricted to `I`.
    pub fn components(&self, i: GenSet) -> Vec<GenSet> {
        let mut left = i;
        let mut out = Vec::new();
        while let Some(start) = left.iter().next() {
            let mut comp = GenSet::singleton(start);
            let mut stack = vec![start];
            while let Some(s) = stack.pop() {
                for t in self.neighbours(i, s) {
                    if !comp.contains(t) {
                        comp = comp.with(t);
                        stack.push(t);
                    }
                }
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Finite-type label of a connected subset, if it has one.
    pub fn component_type(&self, c: GenSet) -> Option<String> {
        let k = c.len();
        let verts: Vec<Gen> = c.iter().collect();
        let mut edges = Vec::new();
        for (x, &a) in verts.iter().enumerate() {
            for &b in &verts[x + 1..] {
                let m = self.m(a, b);
                if m == 0 {
                    return None;
                }
                if m != 2 {
                    edges.push((a, b, m));
                }
            }
        }
        match k {
            0 => return Some(String::new()),
            1 => return Some("A1".to_string()),
            2 => {
                let m = edges.first().map(|e| e.2).unwrap_or(2);
                return Some(match m {
                    3 => "A2".to_string(),
                    4 => "B2".to_string(),
                    6 => "G2".to_string(),
                    m => format!("I2({m})"),
                });
            }
            _ => {}
        }
        if edges.len() != k - 1 {
            return None;
        }
        let deg = |v: Gen| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
        let degrees: Vec<usize> = verts.iter().map(|&v| deg(v)).collect();
        if degrees.iter().any(|&d| d > 3) {
            return None;
        }
        let branch: Vec<Gen> = verts.iter().zip(&degrees).filter(|(_, &d)| d == 3).map(|(&v, _)| v).collect();
        let heavy: Vec<&(Gen, Gen, u32)> = edges.iter().filter(|e| e.2 > 3).collect();
        if branch.len() > 1 {
            return None;
        }
        if let Some(&centre) = branch.first() {
            if !heavy.is_empty() {
                return None;
            }
            let mut arms: Vec<usize> = Vec::new();
            for &(a, b, _) in edges.iter().filter(|e| e.0 == centre || e.1 == centre) {
                let mut prev = centre;
                let mut cur = if a == centre { b } else { a };
                let mut len = 1;
                loop {
                    let next: Vec<Gen> = edges
                        .iter()
                        .filter_map(|e| if e.0 == cur { Some(e.1) } else if e.1 == cur { Some(e.0) } else { None })
                        .filter(|&v| v != prev)
                        .collect();
                    match next.as_slice() {
                        [] => break,
                        [n] => {
                            prev = cur;
                            cur = *n;
                            len += 1;
                        }
                        _ => return None,
                    }
                }
                arms.push(len);
            }
            arms.sort_unstable();
            return match arms.as_slice() {
                [1, 1, _] => Some(format!("D{k}")),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Some(format!("E{k}")),
                _ => None,
            };
        }
        // A path: read the labels from one end.
        let end = *verts.iter().zip(&degrees).find(|(_, &d)| d == 1)?.0;
        let mut labels = Vec::new();
        let mut prev = end;
        let mut cur = end;
        while labels.len() < k - 1 {
            let (next, m) = edges.iter().find_map(|e| {
                if e.0 == cur && e.1 != prev {
                    Some((e.1, e.2))
                } else if e.1 == cur && e.0 != prev {
                    Some((e.0, e.2))
                } else {
                    None
                }
            })?;
            labels.push(m);
            prev = cur;
            cur = next;
        }
        let big: Vec<(usize, u32)> = labels.iter().copied().enumerate().filter(|(_, m)| *m > 3).collect();
        let last = k - 2;
        match big.as_slice() {
            [] => Some(format!("A{k}")),
            [(p, 4)] if *p == 0 || *p == last => Some(format!("B{k}")),
            [(1, 4)] if k == 4 => Some("F4".to_string()),
            [(p, 5)] if (*p == 0 || *p == last) && k <= 4 => Some(format!("H{k}")),
            _ => None,
        }
    }

    /// Finite-type labels of the components of `I`, if all are finite.
    pub fn finite_type(&self, i: GenSet) -> Option<Vec<String>> {
        self.components(i).into_iter().map(|c| self.component_type(c)).collect()
    }

    pub fn is_finite_type(&self, i: GenSet) -> bool {
        self.finite_type(i).is_some()
    }

    pub fn require_finite(&self, i: GenSet) -> Result<()> {
        if self.is_finite_type(i) {
            Ok(())
        } else {
            Err(Error::NotSphericalType(format!("{{{}}}", self.format_subset(i))))
        }
    }

    /// `w₀(I)`.
    pub fn longest_element(&self, i: GenSet) -> Result<WElement> {
        self.require_finite(i)?;
        let mut a = self.identity_action();
        let mut word = Vec::new();
        while let Some(s) = i.iter().find(|&s| self.root_sign(&a.cols[s as usize]) > 0) {
            word.push(s);
            self.action_push(&mut a, s);
        }
        Ok(self.element(&word))
    }

    /// The reflection `s_γ` for a root `γ`, as an element of `W`.
    pub fn reflection_of_root(&self, gamma: &Root) -> WElement {
        let mut g = self.positive(gamma);
        let mut path = Vec::new();
        loop {
            if let Some((s, true)) = g.as_simple() {
                let mut word = path.clone();
                word.push(s);
                word.extend(path.iter().rev());
                return self.element(&word);
            }
            let t = (0..self.rank() as Gen)
                .find(|&t| self.ring.sign(&self.pair_simple(t, &g)) > 0)
                .expect("a positive non-simple root pairs positively with some simple root");
            self.reflect_simple(t, &mut g);
            path.push(t);
        }
    }

    /// The positive root of a reflection.
    pub fn root_of_reflection(&self, t: &WElement) -> Option<Root> {
        self.inversion_set(t)
            .into_iter()
            .find(|r| self.act_on_root(t, r) == r.neg())
            .filter(|r| self.reflection_of_root(r) == *t)
    }

    /// Depth of a positive root: length of a shortest `w` with `w⁻¹(γ)` simple.
    pub fn root_depth(&self, gamma: &Root) -> usize {
        let mut g = self.positive(gamma);
        let mut d = 1;
        while g.as_simple().is_none() {
            let t = (0..self.rank() as Gen)
                .find(|&t| self.ring.sign(&self.pair_simple(t, &g)) > 0)
                .expect("non-simple positive root");
            self.reflect_simple(t, &mut g);
            d += 1;
        }
        d
    }

    /// Positive roots of depth at most `depth`, or all of them when `W_I` is
    /// finite and `depth` is `None`. Only roots with support in `I` appear.
    pub fn positive_roots(&self, i: GenSet, depth: Option<usize>) -> BTreeSet<Root> {
        let mut out = BTreeSet::new();
        let mut frontier: Vec<Root> = i.iter().map(|s| self.simple_root(s)).collect();
        out.extend(frontier.iter().cloned());
        let mut level = 1;
        while !frontier.is_empty() && depth.is_none_or(|d| level < d) {
            let mut next = Vec::new();
            for r in &frontier {
                for s in i.iter() {
                    let mut img = r.clone();
                    self.reflect_simple(s, &mut img);
                    if self.root_sign(&img) > 0 && out.insert(img.clone()) {
                        next.push(img);
                    }
                }
            }
            frontier = next;
            level += 1;
        }
        out
    }
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem").field("names", &self.names).field("m", &self.m).finish()
    }
}
