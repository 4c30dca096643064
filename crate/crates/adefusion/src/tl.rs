//! The Temperley-Lieb diagram engine.
//!
//! Morphisms are exact linear combinations of non-crossing perfect matchings
//! of boundary points. Boundary points are numbered counterclockwise from the
//! bottom-left: bottom points `0..n` left to right, then top points right to
//! left. A matching is planar iff it is non-crossing as a chord diagram in
//! that circular order, which makes planarity a single uniform check.
//!
//! Closed loops produced by composition are removed eagerly, each
//! contributing a factor of the loop parameter `delta = [2]_q`; diagrams are
//! therefore stored loop-free and equality is term-map equality.

use crate::cyclo::{quantum_integer, Cyc};
use num::BigRational;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

/// A non-crossing perfect matching of circularly numbered boundary points.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    pairs: Vec<(u16, u16)>,
}

impl Matching {
    pub fn new(mut pairs: Vec<(u16, u16)>) -> Self {
        for p in pairs.iter_mut() {
            if p.0 > p.1 {
                std::mem::swap(&mut p.0, &mut p.1);
            }
        }
        pairs.sort_unstable();
        Matching { pairs }
    }

    pub fn pairs(&self) -> &[(u16, u16)] {
        &self.pairs
    }

    pub fn points(&self) -> usize {
        self.pairs.len() * 2
    }

    /// Partner lookup table; `table[i]` is the point matched with `i`.
    pub fn partner_table(&self, points: usize) -> Vec<u16> {
        let mut t = vec![u16::MAX; points];
        for &(a, b) in &self.pairs {
            t[a as usize] = b;
            t[b as usize] = a;
        }
        t
    }

    pub fn partner(&self, i: u16) -> u16 {
        for &(a, b) in &self.pairs {
            if a == i {
                return b;
            }
            if b == i {
                return a;
            }
        }
        panic!("point {i} not matched");
    }

    pub fn is_planar(&self) -> bool {
        for (k, &(a, b)) in self.pairs.iter().enumerate() {
            for &(c, d) in &self.pairs[k + 1..] {
                let inside_c = a < c && c < b;
                let inside_d = a < d && d < b;
                if inside_c != inside_d {
                    return false;
                }
            }
        }
        true
    }

    /// Shift every index by `delta` modulo `points`.
    fn rotated(&self, delta: i32, points: u16) -> Matching {
        let shift =
            |x: u16| -> u16 { ((x as i32 + delta).rem_euclid(points as i32)) as u16 };
        Matching::new(self.pairs.iter().map(|&(a, b)| (shift(a), shift(b))).collect())
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, "]")
    }
}

/// All non-crossing perfect matchings of `points` boundary points.
pub fn enumerate_matchings(points: usize) -> Vec<Matching> {
    fn rec(idx: &[u16]) -> Vec<Vec<(u16, u16)>> {
        if idx.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        let a = idx[0];
        for k in (1..idx.len()).step_by(2) {
            let b = idx[k];
            let inner = rec(&idx[1..k]);
            let outer = rec(&idx[k + 1..]);
            for i in &inner {
                for o in &outer {
                    let mut v = vec![(a, b)];
                    v.extend_from_slice(i);
                    v.extend_from_slice(o);
                    out.push(v);
                }
            }
        }
        out
    }
    if points % 2 != 0 {
        return Vec::new();
    }
    let idx: Vec<u16> = (0..points as u16).collect();
    rec(&idx).into_iter().map(Matching::new).collect()
}

pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TlError {
    #[error("arity mismatch: composing {left} with {right}")]
    ArityMismatch { left: String, right: String },
    #[error("quantum integer [{0}] vanishes; Jones-Wenzl recursion undefined (level cutoff)")]
    QuantumIntegerZero(usize),
}

/// A formal linear combination of planar matchings between `src` bottom
/// points and `tgt` top points, over the cyclotomic field of the ambient `q`.
#[derive(Clone, PartialEq, Eq)]
pub struct TLMorphism {
    pub src: usize,
    pub tgt: usize,
    q: Cyc,
    terms: BTreeMap<Matching, Cyc>,
}

impl fmt::Debug for TLMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{}: ", self.src, self.tgt)?;
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c} * {m:?}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl TLMorphism {
    pub fn zero(src: usize, tgt: usize, q: Cyc) -> Self {
        TLMorphism { src, tgt, q, terms: BTreeMap::new() }
    }

    pub fn from_matching(src: usize, tgt: usize, q: Cyc, m: Matching) -> Self {
        assert_eq!(m.points(), src + tgt, "matching size must cover the boundary");
        debug_assert!(m.is_planar(), "non-planar matching");
        let mut terms = BTreeMap::new();
        terms.insert(m, Cyc::one());
        TLMorphism { src, tgt, q, terms }
    }

    pub fn q(&self) -> &Cyc {
        &self.q
    }

    pub fn delta(&self) -> Cyc {
        quantum_integer(2, &self.q).expect("loop parameter requires q != +-1")
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &Cyc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Matching) -> Cyc {
        self.terms.get(m).cloned().unwrap_or_else(|| Cyc::zero(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn top_idx(src: usize, tgt: usize, i: usize) -> u16 {
        (src + tgt - 1 - i) as u16
    }

    pub fn identity(n: usize, q: Cyc) -> Self {
        let m =
            Matching::new((0..n).map(|i| (i as u16, Self::top_idx(n, n, i))).collect());
        Self::from_matching(n, n, q, m)
    }

    pub fn identity_matching(n: usize) -> Matching {
        Matching::new((0..n).map(|i| (i as u16, Self::top_idx(n, n, i))).collect())
    }

    /// The empty diagram in `P_0`.
    pub fn empty(q: Cyc) -> Self {
        Self::from_matching(0, 0, q, Matching::new(vec![]))
    }

    pub fn scalar(q: Cyc, value: Cyc) -> Self {
        let mut s = Self::empty(q);
        s.scale(&value);
        s
    }

    pub fn cup(q: Cyc) -> Self {
        Self::from_matching(0, 2, q, Matching::new(vec![(0, 1)]))
    }

    pub fn cap(q: Cyc) -> Self {
        Self::from_matching(2, 0, q, Matching::new(vec![(0, 1)]))
    }

    /// Nested cups `0 -> 2k` pairing position `i` with `2k-1-i`.
    pub fn nested_cups(k: usize, q: Cyc) -> Self {
        let pairs = (0..k).map(|i| (i as u16, (2 * k - 1 - i) as u16)).collect();
        Self::from_matching(0, 2 * k, q, Matching::new(pairs))
    }

    /// Nested caps `2k -> 0` pairing position `i` with `2k-1-i`.
    pub fn nested_caps(k: usize, q: Cyc) -> Self {
        let pairs = (0..k).map(|i| (i as u16, (2 * k - 1 - i) as u16)).collect();
        Self::from_matching(2 * k, 0, q, Matching::new(pairs))
    }

    /// The Temperley-Lieb generator `e_i` in `TL_n` (0-indexed position).
    pub fn e(n: usize, i: usize, q: Cyc) -> Self {
        assert!(i + 1 < n);
        let mut pairs = vec![(i as u16, (i + 1) as u16)];
        pairs.push((Self::top_idx(n, n, i), Self::top_idx(n, n, i + 1)));
        for j in 0..n {
            if j != i && j != i + 1 {
                pairs.push((j as u16, Self::top_idx(n, n, j)));
            }
        }
        Self::from_matching(n, n, q, Matching::new(pairs))
    }

    pub fn scale(&mut self, c: &Cyc) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v = v.mul(c);
        }
    }

    pub fn scaled(&self, c: &Cyc) -> Self {
        let mut out = self.clone();
        out.scale(c);
        out
    }

    pub fn add_assign(&mut self, other: &TLMorphism) {
        assert_eq!((self.src, self.tgt), (other.src, other.tgt), "shape mismatch in add");
        assert_eq!(self.q, other.q, "ambient q mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
        self.prune_zeros();
    }

    pub fn add(&self, other: &TLMorphism) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &TLMorphism) -> Self {
        self.add(&other.scaled(&Cyc::from_integer(-1)))
    }

    fn add_term(&mut self, m: Matching, c: Cyc) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(|| Cyc::zero(1));
        *entry = entry.add(&c);
    }

    fn prune_zeros(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    /// Vertical stacking `self ∘ other` (other below, its top glued to our
    /// bottom); each closed loop contributes a factor `delta`.
    pub fn compose(&self, other: &TLMorphism) -> Result<TLMorphism, TlError> {
        if self.src != other.tgt {
            return Err(TlError::ArityMismatch {
                left: format!("{}→{}", other.src, other.tgt),
                right: format!("{}→{}", self.src, self.tgt),
            });
        }
        assert_eq!(self.q, other.q, "ambient q mismatch");
        let delta = self.delta();
        let mut out = TLMorphism::zero(other.src, self.tgt, self.q.clone());
        let mut dpow: Vec<Cyc> = vec![Cyc::one()];
        for (mf, cf) in &self.terms {
            for (mg, cg) in &other.terms {
                let (m, loops) = glue(mg, other.src, other.tgt, mf, self.src, self.tgt);
                while dpow.len() <= loops {
                    let last = dpow.last().unwrap().mul(&delta);
                    dpow.push(last);
                }
                let coeff = cf.mul(cg).mul(&dpow[loops]);
                out.add_term(m, coeff);
            }
        }
        out.prune_zeros();
        Ok(out)
    }

    /// Horizontal juxtaposition `self ⊗ other` (self on the left).
    pub fn tensor(&self, other: &TLMorphism) -> TLMorphism {
        assert_eq!(self.q, other.q, "ambient q mismatch");
        let src = self.src + other.src;
        let tgt = self.tgt + other.tgt;
        let map_self = |i: u16| -> u16 {
            let i = i as usize;
            if i < self.src {
                i as u16
            } else {
                let p = self.src + self.tgt - 1 - i;
                Self::top_idx(src, tgt, p)
            }
        };
        let map_other = |i: u16| -> u16 {
            let i = i as usize;
            if i < other.src {
                (self.src + i) as u16
            } else {
                let p = other.src + other.tgt - 1 - i;
                Self::top_idx(src, tgt, self.tgt + p)
            }
        };
        let mut out = TLMorphism::zero(src, tgt, self.q.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut pairs: Vec<(u16, u16)> = ma
                    .pairs()
                    .iter()
                    .map(|&(x, y)| (map_self(x), map_self(y)))
                    .collect();
                pairs.extend(mb.pairs().iter().map(|&(x, y)| (map_other(x), map_other(y))));
                out.add_term(Matching::new(pairs), ca.mul(cb));
            }
        }
        out.prune_zeros();
        out
    }

    /// Rotation by one strand: every boundary index shifts one step
    /// clockwise (the bottom-left leg wraps around to the top-left).
    pub fn rho(&self) -> TLMorphism {
        let points = (self.src + self.tgt) as u16;
        let mut out = TLMorphism::zero(self.src, self.tgt, self.q.clone());
        for (m, c) in &self.terms {
            out.add_term(m.rotated(-1, points), c.clone());
        }
        out
    }

    /// Cap the pair of top points at geometric positions `(i, i+1)`.
    pub fn cap_top_at(&self, i: usize) -> TLMorphism {
        assert!(i + 1 < self.tgt, "cap position out of range");
        let a = Self::top_idx(self.src, self.tgt, i + 1);
        let b = Self::top_idx(self.src, self.tgt, i);
        debug_assert_eq!(a + 1, b);
        let delta = self.delta();
        let mut out = TLMorphism::zero(self.src, self.tgt - 2, self.q.clone());
        for (m, c) in &self.terms {
            let t = m.partner_table(self.src + self.tgt);
            let (pa, pb) = (t[a as usize], t[b as usize]);
            let mut coeff = c.clone();
            let mut pairs: Vec<(u16, u16)> = Vec::with_capacity(m.pairs().len() - 1);
            if pa == b {
                coeff = coeff.mul(&delta);
                for &(x, y) in m.pairs() {
                    if (x, y) != (a.min(b), a.max(b)) {
                        pairs.push((x, y));
                    }
                }
            } else {
                for &(x, y) in m.pairs() {
                    let touches = |p: u16| p == a || p == b;
                    if !touches(x) && !touches(y) {
                        pairs.push((x, y));
                    }
                }
                pairs.push((pa.min(pb), pa.max(pb)));
            }
            // the capped indices were the two largest, so the rest renumber
            // in place
            out.add_term(Matching::new(pairs), coeff);
        }
        out.prune_zeros();
        out
    }

    /// `tau`: cap the top-left pair.
    pub fn tau(&self) -> TLMorphism {
        self.cap_top_at(0)
    }

    /// Close every strand around the right; the scalar result is wrapped as
    /// an element of `P_0`.
    pub fn hat(&self) -> TLMorphism {
        TLMorphism::scalar(self.q.clone(), self.markov_trace())
    }

    /// The Markov trace: close all strands around the right and evaluate
    /// every loop at `delta`.
    pub fn markov_trace(&self) -> Cyc {
        assert_eq!(self.src, self.tgt, "trace needs equal bottom and top arity");
        let n = self.src;
        if n == 0 {
            return self.coefficient(&Matching::new(vec![]));
        }
        let delta = self.delta();
        let mut total = Cyc::zero(1);
        for (m, c) in &self.terms {
            let t = m.partner_table(2 * n);
            let mut seen = vec![false; 2 * n];
            let mut loops = 0usize;
            for start in 0..2 * n {
                if seen[start] {
                    continue;
                }
                let mut cur = start;
                loop {
                    seen[cur] = true;
                    let p = t[cur] as usize;
                    seen[p] = true;
                    let next = 2 * n - 1 - p; // closure arc bottom i <-> top i
                    if next == start {
                        break;
                    }
                    cur = next;
                }
                loops += 1;
            }
            let mut contrib = c.clone();
            for _ in 0..loops {
                contrib = contrib.mul(&delta);
            }
            total = total.add(&contrib);
        }
        total
    }

    /// True when every adjacent cap on the top and on the bottom kills the
    /// element.
    pub fn is_uncappable(&self) -> bool {
        for i in 0..self.tgt.saturating_sub(1) {
            if !self.cap_top_at(i).is_zero() {
                return false;
            }
        }
        let flipped = self.flip();
        for i in 0..flipped.tgt.saturating_sub(1) {
            if !flipped.cap_top_at(i).is_zero() {
                return false;
            }
        }
        true
    }

    /// Vertical flip (exchange source and target).
    pub fn flip(&self) -> TLMorphism {
        let map = |i: u16| -> u16 {
            let i = i as usize;
            if i < self.src {
                Self::top_idx(self.tgt, self.src, i)
            } else {
                (self.src + self.tgt - 1 - i) as u16
            }
        };
        let mut out = TLMorphism::zero(self.tgt, self.src, self.q.clone());
        for (m, c) in &self.terms {
            let pairs = m.pairs().iter().map(|&(a, b)| (map(a), map(b))).collect();
            out.add_term(Matching::new(pairs), c.clone());
        }
        out
    }
}

/// Glue `upper` (src_u -> tgt_u) on top of `lower` (src_l -> tgt_l), where
/// `tgt_l == src_u`; returns the boundary matching of the composite and the
/// number of closed loops formed.
fn glue(
    lower: &Matching,
    src_l: usize,
    tgt_l: usize,
    upper: &Matching,
    src_u: usize,
    tgt_u: usize,
) -> (Matching, usize) {
    debug_assert_eq!(tgt_l, src_u);
    let nl = src_l + tgt_l;
    let nu = src_u + tgt_u;
    let lower_t = lower.partner_table(nl);
    let upper_t = upper.partner_table(nu);
    let bridge_of = |node: usize| -> Option<usize> {
        if node < nl {
            if node >= src_l {
                let i = src_l + tgt_l - 1 - node; // geometric position on the cut
                Some(nl + i)
            } else {
                None
            }
        } else {
            let u = node - nl;
            if u < src_u {
                Some(src_l + tgt_l - 1 - u)
            } else {
                None
            }
        }
    };
    let partner_of = |node: usize| -> usize {
        if node < nl {
            lower_t[node] as usize
        } else {
            nl + upper_t[node - nl] as usize
        }
    };
    let res_src = src_l;
    let res_tgt = tgt_u;
    let res_points = res_src + res_tgt;
    let boundary_node = |res_idx: usize| -> usize {
        if res_idx < res_src {
            res_idx
        } else {
            let i = res_src + res_tgt - 1 - res_idx; // geometric top position
            nl + src_u + tgt_u - 1 - i
        }
    };
    let mut node_to_res = vec![usize::MAX; nl + nu];
    for r in 0..res_points {
        node_to_res[boundary_node(r)] = r;
    }
    let mut visited = vec![false; nl + nu];
    let mut pairs: Vec<(u16, u16)> = Vec::with_capacity(res_points / 2);
    for r in 0..res_points {
        let start = boundary_node(r);
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut cur = start;
        loop {
            let p = partner_of(cur);
            visited[p] = true;
            if node_to_res[p] != usize::MAX {
                let a = node_to_res[start];
                let b = node_to_res[p];
                pairs.push((a.min(b) as u16, a.max(b) as u16));
                break;
            }
            let next = bridge_of(p).expect("interior point must sit on the cut");
            visited[next] = true;
            cur = next;
        }
    }
    let mut loops = 0usize;
    for node in 0..nl + nu {
        if visited[node] || node_to_res[node] != usize::MAX {
            continue;
        }
        let start = node;
        let mut cur = node;
        loop {
            visited[cur] = true;
            let p = partner_of(cur);
            visited[p] = true;
            let next = bridge_of(p).expect("middle cycle must stay on the cut");
            if next == start {
                break;
            }
            cur = next;
        }
        loops += 1;
    }
    (Matching::new(pairs), loops)
}

// ---------------------------------------------------------------------------
// Jones-Wenzl idempotents
// ---------------------------------------------------------------------------

type JwCache = RwLock<HashMap<(usize, String), Arc<TLMorphism>>>;

fn jw_cache() -> &'static JwCache {
    static CACHE: OnceLock<JwCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The Jones-Wenzl idempotent `f^(n)` in `TL_n`, memoised per `(n, q)`.
///
/// Built by the recursion
/// `f^(n+1) = f^(n)⊗1 - ([n]/[n+1]) (f^(n)⊗1) e_n (f^(n)⊗1)`.
/// Fails with [`TlError::QuantumIntegerZero`] when some `[k]_q = 0` for
/// `k <= n`, which signals the level cutoff of the `A_{k-1}` quotient.
pub fn jones_wenzl(n: usize, q: &Cyc) -> Result<Arc<TLMorphism>, TlError> {
    let key = (n, q.serialize());
    if let Some(f) = jw_cache().read().unwrap().get(&key) {
        return Ok(f.clone());
    }
    for k in 1..=n {
        let qk = quantum_integer(k as i64, q).map_err(|_| TlError::QuantumIntegerZero(1))?;
        if qk.is_zero() {
            return Err(TlError::QuantumIntegerZero(k));
        }
    }
    let mut f = if n == 0 {
        TLMorphism::empty(q.clone())
    } else {
        TLMorphism::identity(1, q.clone())
    };
    for k in 1..n {
        // reuse cached lower idempotents when available
        let lower_key = (k + 1, q.serialize());
        if let Some(cached) = jw_cache().read().unwrap().get(&lower_key) {
            f = (**cached).clone();
            continue;
        }
        let fk1 = f.tensor(&TLMorphism::identity(1, q.clone()));
        let ek = TLMorphism::e(k + 1, k - 1, q.clone());
        let g = ek.compose(&fk1).unwrap();
        // terms whose top has an arc inside the first k positions die
        // against the upper copy of f^(k): f^(k) kills caps
        let g = prune_against_upper_jw(g, k);
        let mid = fk1.compose(&g).unwrap();
        let ratio = quantum_integer(k as i64, q)
            .unwrap()
            .mul(&quantum_integer((k + 1) as i64, q).unwrap().inv());
        f = fk1.sub(&mid.scaled(&ratio));
        jw_cache()
            .write()
            .unwrap()
            .entry(lower_key)
            .or_insert_with(|| Arc::new(f.clone()));
    }
    let f = Arc::new(f);
    jw_cache().write().unwrap().entry(key.clone()).or_insert_with(|| f.clone());
    Ok(jw_cache().read().unwrap().get(&key).unwrap().clone())
}

fn prune_against_upper_jw(g: TLMorphism, k: usize) -> TLMorphism {
    let src = g.src;
    let tgt = g.tgt;
    let mut out = TLMorphism::zero(src, tgt, g.q().clone());
    'term: for (m, c) in g.terms() {
        for &(a, b) in m.pairs() {
            let (a, b) = (a as usize, b as usize);
            if a >= src && b >= src {
                let pa = src + tgt - 1 - a;
                let pb = src + tgt - 1 - b;
                if pa < k && pb < k {
                    continue 'term;
                }
            }
        }
        out.add_term(m.clone(), c.clone());
    }
    out
}

// ---------------------------------------------------------------------------
// Braiding
// ---------------------------------------------------------------------------

/// Which of the two braidings on an `A_N` planar algebra to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum BraidKind {
    /// `i q^{1/2} id - i q^{-1/2} cupcap`
    Standard,
    /// `-i q^{-1/2} id + i q^{1/2} cupcap`
    Bop,
}

impl BraidKind {
    pub fn reversed(self) -> Self {
        match self {
            BraidKind::Standard => BraidKind::Bop,
            BraidKind::Bop => BraidKind::Standard,
        }
    }
}

impl fmt::Display for BraidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidKind::Standard => write!(f, "standard"),
            BraidKind::Bop => write!(f, "bop"),
        }
    }
}

/// Braiding data: a chosen square root of `q` plus the crossing convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidParams {
    pub q_half: Cyc,
    pub kind: BraidKind,
}

impl BraidParams {
    pub fn new(q_half: Cyc, kind: BraidKind) -> Self {
        BraidParams { q_half, kind }
    }

    pub fn q(&self) -> Cyc {
        self.q_half.mul(&self.q_half)
    }

    /// Coefficients `(a, b)` of the crossing `a·id + b·cupcap`.
    pub fn coefficients(&self) -> (Cyc, Cyc) {
        let i = Cyc::root_of_unity(4, 1);
        match self.kind {
            BraidKind::Standard => (i.mul(&self.q_half), i.mul(&self.q_half.inv()).neg()),
            BraidKind::Bop => (i.mul(&self.q_half.inv()).neg(), i.mul(&self.q_half)),
        }
    }

    pub fn reversed(&self) -> Self {
        BraidParams { q_half: self.q_half.clone(), kind: self.kind.reversed() }
    }
}

/// The braid element in `P_4` (a crossing of two strands).
pub fn braid_element(params: &BraidParams) -> TLMorphism {
    braid_generator(2, 0, params)
}

/// Elementary crossing `b_i` in `TL_n`.
pub fn braid_generator(n: usize, i: usize, params: &BraidParams) -> TLMorphism {
    let q = params.q();
    let (a, b) = params.coefficients();
    let id = TLMorphism::identity(n, q.clone());
    let e = TLMorphism::e(n, i, q);
    id.scaled(&a).add(&e.scaled(&b))
}

/// The scalar by which a single positive curl acts on `f^(n)`.
///
/// `n = 1` is evaluated directly by closing the crossing on the right; the
/// step to `n+1` multiplies by the one-strand curl and by the monodromy
/// eigenvalue of a strand against an n-cable, the square of the crossing's
/// identity coefficient to the n-th power. Direct diagram evaluation for
/// small `n` is kept as a test oracle.
pub fn curl_value(n: usize, params: &BraidParams, q: &Cyc) -> Result<Cyc, TlError> {
    assert_eq!(&params.q(), q, "braid parameters must square to the ambient q");
    let _ = jones_wenzl(n, q)?;
    Ok(curl_value_unchecked(n, params))
}

/// Twist scalar formula without the Jones-Wenzl existence check (inside the
/// Hopf sum the summands past the level cutoff carry `[k+1] = 0` and
/// contribute nothing).
pub fn curl_value_unchecked(n: usize, params: &BraidParams) -> Cyc {
    let (a, b) = params.coefficients();
    let q = params.q();
    let delta = quantum_integer(2, &q).unwrap();
    let t1 = a.mul(&delta).add(&b);
    let lambda_step = a.mul(&a);
    let mut t = Cyc::one();
    let mut lam = Cyc::one();
    for _ in 0..n {
        t = t.mul(&t1).mul(&lam);
        lam = lam.mul(&lambda_step);
    }
    t
}

/// Hopf link evaluation with `f^(m)` and `f^(n)` inserted in the two
/// components.
///
/// Uses the ribbon identity: the monodromy eigenvalue on the summand
/// `f^(k)` of `f^(m) ⊗ f^(n)` is `t_k/(t_m t_n)`, so the link value is
/// `sum_k t_k/(t_m t_n) [k+1]` over `|m-n| <= k <= m+n`, `k ≡ m+n (mod 2)`.
pub fn hopf_value(m: usize, n: usize, params: &BraidParams, q: &Cyc) -> Result<Cyc, TlError> {
    let _ = jones_wenzl(m, q)?;
    let _ = jones_wenzl(n, q)?;
    let tm = curl_value_unchecked(m, params);
    let tn = curl_value_unchecked(n, params);
    let mut total = Cyc::zero(1);
    let lo = m.abs_diff(n);
    let hi = m + n;
    let mut k = lo;
    while k <= hi {
        let tk = curl_value_unchecked(k, params);
        let dim_k = quantum_integer((k + 1) as i64, q).unwrap();
        total = total.add(&tk.mul(&dim_k));
        k += 2;
    }
    Ok(total.mul(&tm.mul(&tn).inv()))
}

/// `[n]_q` with a friendlier panic for the TL layer.
pub fn qint(n: i64, q: &Cyc) -> Cyc {
    quantum_integer(n, q).expect("quantum integer undefined at q = +-1")
}

pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(num::BigInt::from(p), num::BigInt::from(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q24() -> Cyc {
        Cyc::root_of_unity(24, 1) // e^{i pi/12}
    }

    fn q8() -> Cyc {
        Cyc::root_of_unity(8, 1) // e^{i pi/4}
    }

    #[test]
    fn catalan_dimension_check() {
        for n in 0..=8usize {
            assert_eq!(enumerate_matchings(2 * n).len() as u64, catalan(n));
        }
        for m in enumerate_matchings(8) {
            assert!(m.is_planar());
        }
    }

    #[test]
    fn compose_identity_and_loops() {
        let q = q24();
        let id3 = TLMorphism::identity(3, q.clone());
        let e1 = TLMorphism::e(3, 0, q.clone());
        assert_eq!(id3.compose(&e1).unwrap(), e1);
        assert_eq!(e1.compose(&id3).unwrap(), e1);
        let cupcap = TLMorphism::cap(q.clone()).compose(&TLMorphism::cup(q.clone())).unwrap();
        let delta = qint(2, &q);
        assert_eq!(cupcap, TLMorphism::scalar(q.clone(), delta.clone()));
        let e1e1 = e1.compose(&e1).unwrap();
        assert_eq!(e1e1, e1.scaled(&delta));
        let e2 = TLMorphism::e(3, 1, q.clone());
        let p = e1.compose(&e2).unwrap().compose(&e1).unwrap();
        assert_eq!(p, e1);
        // arity mismatch surfaces as an error
        assert!(e1.compose(&TLMorphism::identity(2, q.clone())).is_err());
    }

    #[test]
    fn rho_tau_hat_behave() {
        let q = q24();
        let id2 = TLMorphism::identity(2, q.clone());
        let e = TLMorphism::e(2, 0, q.clone());
        assert_eq!(id2.rho(), e);
        assert_eq!(e.rho(), id2);
        let mut r = e.clone();
        for _ in 0..4 {
            r = r.rho();
        }
        assert_eq!(r, e);
        // capping the top of cupcap closes a loop: delta-scaled cap
        assert_eq!(e.tau(), TLMorphism::cap(q.clone()).scaled(&qint(2, &q)));
        assert_eq!(id2.tau(), TLMorphism::cap(q.clone()));
        // capping an already-joined pair produces a delta: tau on cup⊗cup
        let cups = TLMorphism::cup(q.clone()).tensor(&TLMorphism::cup(q.clone()));
        let capped = cups.tau();
        assert_eq!(capped.num_terms(), 1);
        let id1 = TLMorphism::identity(1, q.clone());
        assert_eq!(id1.hat(), TLMorphism::scalar(q.clone(), qint(2, &q)));
        // trace property: tr(xy) = tr(yx)
        let x = TLMorphism::e(3, 0, q.clone())
            .add(&TLMorphism::identity(3, q.clone()).scaled(&qint(3, &q)));
        let y = TLMorphism::e(3, 1, q.clone()).add(&TLMorphism::e(3, 0, q.clone()));
        assert_eq!(
            x.compose(&y).unwrap().markov_trace(),
            y.compose(&x).unwrap().markov_trace()
        );
    }

    #[test]
    fn jones_wenzl_small() {
        let q = q24();
        let f1 = jones_wenzl(1, &q).unwrap();
        assert_eq!(*f1, TLMorphism::identity(1, q.clone()));
        let f2 = jones_wenzl(2, &q).unwrap();
        let expect = TLMorphism::identity(2, q.clone())
            .sub(&TLMorphism::e(2, 0, q.clone()).scaled(&qint(2, &q).inv()));
        assert_eq!(*f2, expect);
        let ff = f2.compose(&f2).unwrap();
        assert_eq!(ff, *f2);
        assert!(f2.is_uncappable());
    }

    #[test]
    fn jones_wenzl_idempotent_uncappable_various_roots() {
        for (m, k) in [(24u32, 1i64), (16, 1), (20, 3), (36, 1), (28, 1)] {
            let q = Cyc::root_of_unity(m, k);
            for n in 1..=6usize {
                match jones_wenzl(n, &q) {
                    Ok(f) => {
                        assert!(f.is_uncappable(), "f{n} cappable at ({m},{k})");
                        let ff = f.compose(&f).unwrap();
                        assert_eq!(ff, *f, "f{n} not idempotent at ({m},{k})");
                        assert!(f
                            .coefficient(&TLMorphism::identity_matching(n))
                            .is_one());
                    }
                    Err(TlError::QuantumIntegerZero(_)) => {}
                    Err(e) => panic!("unexpected error {e:?}"),
                }
            }
        }
    }

    #[test]
    fn jw_cutoff_error() {
        // at q = e^{i pi/4}, [4] = 0 so f^(4) is undefined
        let err = jones_wenzl(4, &q8()).unwrap_err();
        assert_eq!(err, TlError::QuantumIntegerZero(4));
    }

    #[test]
    fn markov_trace_of_jw() {
        let q = q24();
        for n in 0..=6usize {
            let f = jones_wenzl(n, &q).unwrap();
            assert_eq!(f.markov_trace(), qint((n + 1) as i64, &q), "trace f^({n})");
        }
        let id4 = TLMorphism::identity(4, q.clone());
        assert_eq!(id4.markov_trace(), qint(2, &q).pow(4));
        let t = jones_wenzl(2, &q).unwrap().markov_trace();
        assert!((t.embed().0 - 2.732).abs() < 1e-3);
    }

    #[test]
    fn braid_reidemeister_and_yang_baxter() {
        let qh = Cyc::root_of_unity(48, 1);
        let p = BraidParams::new(qh.clone(), BraidKind::Standard);
        let b = braid_element(&p);
        let binv = braid_element(&p.reversed());
        let q = p.q();
        assert_eq!(b.compose(&binv).unwrap(), TLMorphism::identity(2, q.clone()));
        let b1 = braid_generator(3, 0, &p);
        let b2 = braid_generator(3, 1, &p);
        let lhs = b1.compose(&b2).unwrap().compose(&b1).unwrap();
        let rhs = b2.compose(&b1).unwrap().compose(&b2).unwrap();
        assert_eq!(lhs, rhs);
        let i = Cyc::root_of_unity(4, 1);
        let coeff = i.mul(&qh).add(&i.mul(&qh.inv()));
        let skein = TLMorphism::identity(2, q.clone())
            .sub(&TLMorphism::e(2, 0, q.clone()))
            .scaled(&coeff);
        assert_eq!(b.sub(&binv), skein);
    }

    #[test]
    fn braid_naturality_on_cable() {
        // (f ⊗ id) ∘ c_{2,1} = c_{2,1} ∘ (id ⊗ f) for f in P_4 samples
        let qh = Cyc::root_of_unity(48, 1);
        let p = BraidParams::new(qh, BraidKind::Standard);
        let q = p.q();
        let c21 = braid_generator(3, 1, &p).compose(&braid_generator(3, 0, &p)).unwrap();
        for f in [TLMorphism::identity(2, q.clone()), TLMorphism::e(2, 0, q.clone())] {
            let left = f
                .tensor(&TLMorphism::identity(1, q.clone()))
                .compose(&c21)
                .unwrap();
            let right = c21
                .compose(&TLMorphism::identity(1, q.clone()).tensor(&f))
                .unwrap();
            assert_eq!(left, right);
        }
    }

    /// Direct diagrammatic curl: a kink on an n-cable capped by `f^(n)`.
    fn curl_direct(n: usize, p: &BraidParams) -> Cyc {
        let q = p.q();
        let f = jones_wenzl(n, &q).unwrap();
        if n == 0 {
            return Cyc::one();
        }
        let total = 2 * n;
        let mut cross = TLMorphism::identity(total, q.clone());
        for i in (0..n).rev() {
            for j in 0..n {
                cross = braid_generator(total, i + j, p).compose(&cross).unwrap();
            }
        }
        let cupk = TLMorphism::nested_cups(n, q.clone());
        let capk = TLMorphism::nested_caps(n, q.clone());
        let idn = TLMorphism::identity(n, q.clone());
        let bottom = idn.tensor(&cupk); // n -> 3n
        let top = idn.tensor(&capk); // 3n -> n
        let kink = top
            .compose(&cross.tensor(&idn).compose(&bottom).unwrap())
            .unwrap();
        let closed = f.compose(&kink).unwrap().compose(&f).unwrap();
        closed.markov_trace().mul(&f.markov_trace().inv())
    }

    #[test]
    fn curl_values_match_direct_evaluation() {
        let qh = Cyc::root_of_unity(48, 1); // q = e^{i pi/12}
        for kind in [BraidKind::Standard, BraidKind::Bop] {
            let p = BraidParams::new(qh.clone(), kind);
            let q = p.q();
            for n in 0..=3usize {
                let direct = curl_direct(n, &p);
                let fast = curl_value(n, &p, &q).unwrap();
                assert_eq!(fast, direct, "curl mismatch kind={kind:?} n={n}");
            }
        }
    }

    #[test]
    fn curl_table_values() {
        // q = e^{i pi/12}, standard braiding: t_1 = i q^{3/2} = e^{15 pi i/24},
        // t_2 = e^{8 pi i/24}
        let qh = Cyc::root_of_unity(48, 1);
        let p = BraidParams::new(qh, BraidKind::Standard);
        let q = p.q();
        assert_eq!(curl_value(0, &p, &q).unwrap(), Cyc::one());
        assert_eq!(curl_value(1, &p, &q).unwrap(), Cyc::root_of_unity(48, 15));
        assert_eq!(curl_value(2, &p, &q).unwrap(), Cyc::root_of_unity(48, 8));
    }

    #[test]
    fn curl_pattern() {
        // t_n = i^{n mod 2} q^{n(n+2)/2} for the standard braiding with the
        // canonical square root
        let m = 28u32; // q = e^{i pi/14}
        let qh = Cyc::root_of_unity(2 * m, 1);
        let p = BraidParams::new(qh.clone(), BraidKind::Standard);
        let q = p.q();
        for n in 0..=8usize {
            let t = curl_value(n, &p, &q).unwrap();
            let mut expect = qh.pow((n * (n + 2)) as i64);
            if n % 2 == 1 {
                expect = expect.mul(&Cyc::root_of_unity(4, 1));
            }
            assert_eq!(t, expect, "pattern mismatch at n={n}");
        }
    }

    /// Brute-force Hopf link: two cabled circles with linking number one.
    fn hopf_direct(m: usize, n: usize, p: &BraidParams) -> Cyc {
        let q = p.q();
        let fm = jones_wenzl(m, &q).unwrap();
        let fn_ = jones_wenzl(n, &q).unwrap();
        let total = m + n;
        let mut cross = TLMorphism::identity(total, q.clone());
        for i in (0..m).rev() {
            for j in 0..n {
                cross = braid_generator(total, i + j, p).compose(&cross).unwrap();
            }
        }
        let mut back = TLMorphism::identity(total, q.clone());
        for j in (0..n).rev() {
            for i in 0..m {
                back = braid_generator(total, j + i, p).compose(&back).unwrap();
            }
        }
        let monodromy = back.compose(&cross).unwrap();
        let projected = fm
            .tensor(&fn_)
            .compose(&monodromy)
            .unwrap()
            .compose(&fm.tensor(&fn_))
            .unwrap();
        projected.markov_trace()
    }

    #[test]
    fn hopf_values() {
        let qh = Cyc::root_of_unity(16, 1); // q = e^{i pi/4}
        let p = BraidParams::new(qh, BraidKind::Standard);
        let q = p.q();
        assert_eq!(hopf_value(0, 2, &p, &q).unwrap(), qint(3, &q));
        assert_eq!(hopf_value(1, 1, &p, &q).unwrap(), hopf_direct(1, 1, &p));
        let v = hopf_value(1, 1, &p, &q).unwrap();
        let closed = qint(4, &q);
        assert!(v == closed || v == closed.neg(), "got {v:?}");
        let s: Vec<Vec<Cyc>> = (0..3)
            .map(|a| (0..3).map(|b| hopf_value(a, b, &p, &q).unwrap()).collect())
            .collect();
        let det = s[0][0]
            .mul(&s[1][1].mul(&s[2][2]).sub(&s[1][2].mul(&s[2][1])))
            .sub(&s[0][1].mul(&s[1][0].mul(&s[2][2]).sub(&s[1][2].mul(&s[2][0]))))
            .add(&s[0][2].mul(&s[1][0].mul(&s[2][1]).sub(&s[1][1].mul(&s[2][0]))));
        assert!(!det.is_zero());
    }

    #[test]
    fn hopf_matches_direct_on_samples() {
        let qh = Cyc::root_of_unity(48, 1);
        for kind in [BraidKind::Standard, BraidKind::Bop] {
            let p = BraidParams::new(qh.clone(), kind);
            for (m, n) in [(1usize, 1usize), (1, 2), (2, 2)] {
                assert_eq!(
                    hopf_value(m, n, &p, &p.q()).unwrap(),
                    hopf_direct(m, n, &p),
                    "hopf mismatch kind={kind:?} ({m},{n})"
                );
            }
        }
    }
}
