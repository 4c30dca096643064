//! Fusion rings of the ADE families and the constructions between them:
//! truncated Verlinde rings, adjoint subrings, Deligne products and `Z/2`
//! de-equivariantizations (which produce the `D_{2N}` rings and the centre
//! rings of the odd `ad(A_N)` and `ad(E_6)` categories).
//!
//! Structure constants are nonnegative integers verified against the ring
//! axioms; Frobenius-Perron dimensions are carried as exact cyclotomic
//! values through every construction.

use crate::cyclo::Cyc;

use serde::Deserialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FusionError {
    #[error("ring has no Z/2 grading")]
    NotGraded,
    #[error("label {0} is not an involution (g ⊗ g must be the unit)")]
    NotInvolution(String),
    #[error("split-coefficient solver found {0} solution classes")]
    SplitSolverAmbiguous(usize),
    #[error("split-coefficient solver found no consistent ring")]
    SplitSolverEmpty,
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
    #[error("ring axiom violated: {0}")]
    AxiomViolation(String),
}

/// Multiplicities of simple labels (an object up to isomorphism).
pub type ObjVec = Vec<u64>;

/// A based fusion ring: ordered labels, unit, duality involution and a
/// nonnegative structure-constant tensor, with exact Frobenius-Perron
/// dimensions attached.
#[derive(Clone, PartialEq, Eq)]
pub struct FusionRing {
    pub name: String,
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    grade: Option<Vec<u8>>,
    /// `prod[i][j]` = sparse list of `(k, N_{ij}^k)`, sorted by `k`.
    prod: Vec<Vec<Vec<(usize, u32)>>>,
    dims: Vec<Cyc>,
}

impl fmt::Debug for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FusionRing({}, rank {})", self.name, self.rank())
    }
}

impl FusionRing {
    pub fn new(
        name: String,
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        grade: Option<Vec<u8>>,
        prod: Vec<Vec<Vec<(usize, u32)>>>,
        dims: Vec<Cyc>,
    ) -> Self {
        FusionRing { name, labels, unit, dual, grade, prod, dims }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_name(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn grading(&self) -> Option<&[u8]> {
        self.grade.as_deref()
    }

    pub fn dims(&self) -> &[Cyc] {
        &self.dims
    }

    pub fn dim(&self, i: usize) -> &Cyc {
        &self.dims[i]
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.prod[i][j]
    }

    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        self.prod[i][j]
            .iter()
            .find(|&&(kk, _)| kk == k)
            .map(|&(_, v)| v)
            .unwrap_or(0)
    }

    pub fn is_invertible(&self, i: usize) -> bool {
        self.dims[i].is_one()
    }

    /// `g ⊗ x` for invertible `g` (single label result).
    pub fn invertible_action(&self, g: usize, x: usize) -> usize {
        let p = &self.prod[g][x];
        assert!(p.len() == 1 && p[0].1 == 1, "label is not invertible");
        p[0].0
    }

    pub fn mul_vec(&self, a: &ObjVec, b: &ObjVec) -> ObjVec {
        let mut out = vec![0u64; self.rank()];
        for (i, &ca) in a.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in b.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                for &(k, n) in &self.prod[i][j] {
                    out[k] += ca * cb * n as u64;
                }
            }
        }
        out
    }

    pub fn add_vec(a: &ObjVec, b: &ObjVec) -> ObjVec {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn basis_vec(&self, i: usize) -> ObjVec {
        let mut v = vec![0u64; self.rank()];
        v[i] = 1;
        v
    }

    pub fn dual_vec(&self, a: &ObjVec) -> ObjVec {
        let mut out = vec![0u64; self.rank()];
        for (i, &c) in a.iter().enumerate() {
            out[self.dual[i]] += c;
        }
        out
    }

    pub fn dim_of_vec(&self, a: &ObjVec) -> Cyc {
        let mut d = Cyc::zero(1);
        for (i, &c) in a.iter().enumerate() {
            if c > 0 {
                d = d.add(&self.dims[i].scale(&num::BigRational::from_integer(c.into())));
            }
        }
        d
    }

    pub fn format_vec(&self, a: &ObjVec) -> String {
        let mut parts = Vec::new();
        for (i, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c == 1 {
                parts.push(self.labels[i].clone());
            } else {
                parts.push(format!("{c}{}", self.labels[i]));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("⊕")
        }
    }

    /// Check unit, duality/Frobenius, commутativity and associativity.
    /// Associativity is exhaustive up to `exhaustive_rank`, sampled with the
    /// given seed above it.
    pub fn verify(&self, exhaustive_rank: usize, seed: u64) -> Result<(), FusionError> {
        let r = self.rank();
        for j in 0..r {
            for k in 0..r {
                let expect = u32::from(j == k);
                if self.n(self.unit, j, k) != expect || self.n(j, self.unit, k) != expect {
                    return Err(FusionError::AxiomViolation(format!(
                        "unit law fails at ({j},{k})"
                    )));
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                let expect = u32::from(j == self.dual[i]);
                if self.n(i, j, self.unit) != expect {
                    return Err(FusionError::AxiomViolation(format!(
                        "duality fails at ({i},{j})"
                    )));
                }
                for k in 0..r {
                    if self.n(i, j, k) != self.n(j, i, k) {
                        return Err(FusionError::AxiomViolation(format!(
                            "commutativity fails at ({i},{j},{k})"
                        )));
                    }
                    // Frobenius reciprocity
                    if self.n(i, j, k) != self.n(self.dual[i], k, j) {
                        return Err(FusionError::AxiomViolation(format!(
                            "Frobenius reciprocity fails at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        let check_assoc = |i: usize, j: usize, k: usize| -> bool {
            // sum_m N_ij^m N_mk^l == sum_m N_jk^m N_im^l for all l
            let mut lhs = vec![0u64; r];
            for &(m, a) in &self.prod[i][j] {
                for &(l, b) in &self.prod[m][k] {
                    lhs[l] += a as u64 * b as u64;
                }
            }
            let mut rhs = vec![0u64; r];
            for &(m, a) in &self.prod[j][k] {
                for &(l, b) in &self.prod[i][m] {
                    rhs[l] += a as u64 * b as u64;
                }
            }
            lhs == rhs
        };
        if r <= exhaustive_rank {
            for i in 0..r {
                for j in 0..r {
                    for k in 0..r {
                        if !check_assoc(i, j, k) {
                            return Err(FusionError::AxiomViolation(format!(
                                "associativity fails at ({i},{j},{k})"
                            )));
                        }
                    }
                }
            }
        } else {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..20_000 {
                let (i, j, k) = (rng.gen_range(0..r), rng.gen_range(0..r), rng.gen_range(0..r));
                if !check_assoc(i, j, k) {
                    return Err(FusionError::AxiomViolation(format!(
                        "associativity fails at sampled ({i},{j},{k})"
                    )));
                }
            }
        }
        // dimension homomorphism
        for i in 0..r {
            for j in 0..r {
                let mut rhs = Cyc::zero(1);
                for &(k, n) in &self.prod[i][j] {
                    rhs = rhs.add(&self.dims[k].scale(&num::BigRational::from_integer(n.into())));
                }
                if self.dims[i].mul(&self.dims[j]) != rhs {
                    return Err(FusionError::AxiomViolation(format!(
                        "dimension homomorphism fails at ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// All label permutations fixing the unit, commuting with duality and
    /// preserving the structure constants, pruned by dimension classes.
    pub fn ring_automorphisms(&self) -> Vec<Vec<usize>> {
        self.automorphisms_with_classes(&self.dim_classes())
    }

    /// Partition of labels by exact FP dimension.
    pub fn dim_classes(&self) -> Vec<usize> {
        let mut reps: Vec<&Cyc> = Vec::new();
        let mut classes = Vec::with_capacity(self.rank());
        for d in &self.dims {
            if let Some(c) = reps.iter().position(|r| *r == d) {
                classes.push(c);
            } else {
                reps.push(d);
                classes.push(reps.len() - 1);
            }
        }
        classes
    }

    /// Automorphism search restricted to permutations preserving a colour
    /// vector (labels may only map to labels of the same colour).
    pub fn automorphisms_with_classes(&self, colors: &[usize]) -> Vec<Vec<usize>> {
        let r = self.rank();
        assert_eq!(colors.len(), r);
        let mut result = Vec::new();
        let mut perm = vec![usize::MAX; r];
        let mut used = vec![false; r];
        perm[self.unit] = self.unit;
        used[self.unit] = true;
        // assign in order of ascending colour-class size for early pruning
        let mut order: Vec<usize> = (0..r).filter(|&i| i != self.unit).collect();
        let mut class_size = BTreeMap::new();
        for &c in colors {
            *class_size.entry(c).or_insert(0usize) += 1;
        }
        order.sort_by_key(|&i| (class_size[&colors[i]], i));
        self.auto_dfs(&order, 0, colors, &mut perm, &mut used, &mut result);
        result.sort();
        result
    }

    fn auto_dfs(
        &self,
        order: &[usize],
        pos: usize,
        colors: &[usize],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == order.len() {
            out.push(perm.clone());
            return;
        }
        let v = order[pos];
        for w in 0..self.rank() {
            if used[w] || colors[w] != colors[v] {
                continue;
            }
            if !self.consistent(v, w, perm) {
                continue;
            }
            perm[v] = w;
            used[w] = true;
            self.auto_dfs(order, pos + 1, colors, perm, used, out);
            perm[v] = usize::MAX;
            used[w] = false;
        }
    }

    fn consistent(&self, v: usize, w: usize, perm: &[usize]) -> bool {
        // duality compatibility
        let dv = self.dual[v];
        if perm[dv] != usize::MAX && perm[dv] != self.dual[w] {
            return false;
        }
        if dv == v && self.dual[w] != w {
            return false;
        }
        // structure-constant compatibility against all assigned labels
        for i in 0..self.rank() {
            let pi = perm[i];
            if pi == usize::MAX {
                continue;
            }
            for k in 0..self.rank() {
                let pk = perm[k];
                if pk == usize::MAX {
                    continue;
                }
                if self.n(v, i, k) != self.n(w, pi, pk) || self.n(i, v, k) != self.n(pi, w, pk) {
                    return false;
                }
                if self.n(v, i, k) != self.n(w, pi, pk) {
                    return false;
                }
                if self.n(i, k, v) != self.n(pi, pk, w) {
                    return false;
                }
            }
            // also products landing on unassigned labels must agree in total
            let mut tv: u64 = 0;
            let mut tw: u64 = 0;
            for &(_, n) in &self.prod[v][i] {
                tv += n as u64;
            }
            for &(_, n) in &self.prod[w][pi] {
                tw += n as u64;
            }
            if tv != tw {
                return false;
            }
        }
        true
    }

    /// JSON-friendly serialization (labels, unit, dual array, sparse
    /// tensor triples and serialized dimension values).
    pub fn to_json(&self) -> serde_json::Value {
        let triples: Vec<(usize, usize, usize, u32)> = (0..self.rank())
            .flat_map(|i| {
                (0..self.rank()).flat_map(move |j| {
                    self.prod[i][j].iter().map(move |&(k, n)| (i, j, k, n))
                })
            })
            .collect();
        serde_json::json!({
            "name": self.name,
            "labels": self.labels,
            "unit": self.unit,
            "dual": self.dual,
            "grading": self.grade,
            "tensor": triples,
            "dims": self.dims.iter().map(|d| d.serialize()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Option<FusionRing> {
        #[derive(Deserialize)]
        struct Raw {
            name: String,
            labels: Vec<String>,
            unit: usize,
            dual: Vec<usize>,
            grading: Option<Vec<u8>>,
            tensor: Vec<(usize, usize, usize, u32)>,
            dims: Vec<String>,
        }
        let raw: Raw = serde_json::from_value(v.clone()).ok()?;
        let r = raw.labels.len();
        let mut prod = vec![vec![Vec::new(); r]; r];
        for (i, j, k, n) in raw.tensor {
            prod[i][j].push((k, n));
        }
        for row in prod.iter_mut() {
            for cell in row.iter_mut() {
                cell.sort_unstable();
            }
        }
        let dims = raw
            .dims
            .iter()
            .map(|s| Cyc::parse(s).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(FusionRing::new(raw.name, raw.labels, raw.unit, raw.dual, raw.grading, prod, dims))
    }
}

fn sparse_from_dense(dense: &[u32]) -> Vec<(usize, u32)> {
    dense
        .iter()
        .enumerate()
        .filter(|&(_, &n)| n > 0)
        .map(|(k, &n)| (k, n))
        .collect()
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// The truncated `A_N` Verlinde ring: labels `f0..f(N-1)`,
/// `N_{ab}^c = 1` iff `|a-b| <= c <= min(a+b, 2(N-1)-a-b)` and `a+b+c` even.
pub fn verlinde_ring(n: usize) -> FusionRing {
    assert!(n >= 2, "the A_N family starts at N = 2");
    let labels: Vec<String> = (0..n).map(|k| format!("f{k}")).collect();
    let q0 = Cyc::root_of_unity(2 * (n as u32 + 1), 1);
    let dims: Vec<Cyc> = (0..n)
        .map(|k| crate::tl::qint((k + 1) as i64, &q0))
        .collect();
    let mut prod = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        for b in 0..n {
            let lo = a.abs_diff(b);
            let hi = (a + b).min(2 * (n - 1) - a - b);
            let mut dense = vec![0u32; n];
            let mut c = lo;
            while c <= hi {
                dense[c] = 1;
                c += 2;
            }
            prod[a][b] = sparse_from_dense(&dense);
        }
    }
    let grade: Vec<u8> = (0..n).map(|k| (k % 2) as u8).collect();
    FusionRing::new(
        format!("A{n}"),
        labels,
        0,
        (0..n).collect(), // all self-dual
        Some(grade),
        prod,
        dims,
    )
}

/// The trivially graded subring of a `Z/2`-graded ring.
pub fn adjoint_subring(r: &FusionRing) -> Result<FusionRing, FusionError> {
    let grade = r.grading().ok_or(FusionError::NotGraded)?.to_vec();
    let keep: Vec<usize> = (0..r.rank()).filter(|&i| grade[i] == 0).collect();
    let back: BTreeMap<usize, usize> =
        keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    let labels = keep.iter().map(|&i| r.label_name(i).to_string()).collect();
    let dims = keep.iter().map(|&i| r.dim(i).clone()).collect();
    let dual = keep.iter().map(|&i| back[&r.dual(i)]).collect();
    let rk = keep.len();
    let mut prod = vec![vec![Vec::new(); rk]; rk];
    for (ia, &a) in keep.iter().enumerate() {
        for (ib, &b) in keep.iter().enumerate() {
            let mut cell = Vec::new();
            for &(k, n) in r.product(a, b) {
                match back.get(&k) {
                    Some(&kk) => cell.push((kk, n)),
                    None => {
                        return Err(FusionError::AxiomViolation(
                            "even part not closed under multiplication".into(),
                        ))
                    }
                }
            }
            prod[ia][ib] = cell;
        }
    }
    Ok(FusionRing::new(
        format!("ad({})", r.name),
        labels,
        back[&r.unit()],
        dual,
        Some(vec![0; rk]),
        prod,
        dims,
    ))
}

/// Deligne product of several rings; labels are tuples joined by `⊠`.
pub fn deligne_product_many(parts: &[&FusionRing]) -> FusionRing {
    assert!(!parts.is_empty());
    let ranks: Vec<usize> = parts.iter().map(|r| r.rank()).collect();
    let total: usize = ranks.iter().product();
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut out = vec![0; parts.len()];
        for f in (0..parts.len()).rev() {
            out[f] = idx % ranks[f];
            idx /= ranks[f];
        }
        out
    };
    let encode = |multi: &[usize]| -> usize {
        let mut idx = 0;
        for (f, &i) in multi.iter().enumerate() {
            idx = idx * ranks[f] + i;
            let _ = f;
        }
        idx
    };
    let mut labels = Vec::with_capacity(total);
    let mut dual = Vec::with_capacity(total);
    let mut dims = Vec::with_capacity(total);
    let mut grade: Option<Vec<u8>> =
        if parts.iter().all(|r| r.grading().is_some()) { Some(Vec::new()) } else { None };
    for idx in 0..total {
        let multi = decode(idx);
        labels.push(
            multi
                .iter()
                .enumerate()
                .map(|(f, &i)| parts[f].label_name(i))
                .collect::<Vec<_>>()
                .join("⊠"),
        );
        dual.push(encode(
            &multi.iter().enumerate().map(|(f, &i)| parts[f].dual(i)).collect::<Vec<_>>(),
        ));
        let mut d = Cyc::one();
        for (f, &i) in multi.iter().enumerate() {
            d = d.mul(parts[f].dim(i));
        }
        dims.push(d);
        if let Some(g) = grade.as_mut() {
            let s: u8 = multi
                .iter()
                .enumerate()
                .map(|(f, &i)| parts[f].grading().unwrap()[i])
                .sum::<u8>()
                % 2;
            g.push(s);
        }
    }
    let mut prod = vec![vec![Vec::new(); total]; total];
    for i in 0..total {
        let mi = decode(i);
        for j in 0..total {
            let mj = decode(j);
            // cartesian product of per-factor sparse products
            let mut cell: Vec<(usize, u32)> = vec![(0, 1)];
            for f in 0..parts.len() {
                let factor = parts[f].product(mi[f], mj[f]);
                let mut next = Vec::with_capacity(cell.len() * factor.len());
                for &(acc_idx, acc_n) in &cell {
                    for &(k, n) in factor {
                        next.push((acc_idx * ranks[f] + k, acc_n * n));
                    }
                }
                cell = next;
            }
            cell.sort_unstable();
            prod[i][j] = cell;
        }
    }
    let unit = encode(&parts.iter().map(|r| r.unit()).collect::<Vec<_>>());
    let name = parts.iter().map(|r| r.name.clone()).collect::<Vec<_>>().join("⊠");
    FusionRing::new(name, labels, unit, dual, grade, prod, dims)
}

pub fn deligne_product(a: &FusionRing, b: &FusionRing) -> FusionRing {
    deligne_product_many(&[a, b])
}

/// Book-keeping from a de-equivariantized ring back to its lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftClass {
    /// Free orbit `{rep, partner}` of base-ring labels.
    Orbit { rep: usize, partner: usize },
    /// One half of a split fixed point.
    Split { fixed: usize, positive: bool },
}

#[derive(Clone, Debug)]
pub struct DeEq {
    pub ring: FusionRing,
    /// per quotient label, the lift data into the base ring
    pub lift: Vec<LiftClass>,
    /// base label index of the involution used
    pub g: usize,
}

/// `Z/2` de-equivariantization by an invertible label `g` with `g ⊗ g = 1`.
///
/// Free orbits `{x, gx}` give one label; each fixed point splits into a pair
/// `P, Q`. The determined coefficients follow the free-module rules; the
/// undetermined ones (products of split labels with everything) are found by
/// bounded search constrained by the sum rules, associativity, duality and
/// the halved Perron dimension, and are accepted only if the solution class
/// is unique up to the `P <-> Q` relabelling. The quotient always carries
/// that relabelling as an automorphism, so it is built into the
/// parametrization.
///
/// `priority` optionally chooses orbit representatives (lower value wins).
pub fn de_equivariantize(
    base: &FusionRing,
    g: usize,
    priority: Option<&[u64]>,
) -> Result<DeEq, FusionError> {
    de_equivariantize_with(base, g, priority, None)
}

/// [`de_equivariantize`] with an optional constraint on the self-duality of
/// the split pair. The centre presentations force `P* = P` (the extra
/// generator pairs nontrivially with itself), which resolves rings the pure
/// axiom system leaves open, e.g. the rank-4 pointed quotient where both
/// `Z/2 x Z/2` and `Z/4` satisfy every ring axiom.
pub fn de_equivariantize_with(
    base: &FusionRing,
    g: usize,
    priority: Option<&[u64]>,
    split_self_dual: Option<bool>,
) -> Result<DeEq, FusionError> {
    let mut cands = de_equivariantize_candidates(base, g, priority, split_self_dual)?;
    match cands.len() {
        0 => Err(FusionError::SplitSolverEmpty),
        1 => Ok(cands.pop().unwrap()),
        k => {
            if std::env::var("ADEFUSION_DEBUG_SPLIT").is_ok() {
                for c in &cands {
                    eprintln!("candidate ring: {:?}", c.ring);
                }
            }
            Err(FusionError::SplitSolverAmbiguous(k))
        }
    }
}

/// All rings consistent with the split-solver constraint system. Callers
/// with extra structure (the centre entries know their twists) filter this
/// list further before demanding uniqueness.
pub fn de_equivariantize_candidates(
    base: &FusionRing,
    g: usize,
    priority: Option<&[u64]>,
    split_self_dual: Option<bool>,
) -> Result<Vec<DeEq>, FusionError> {
    let r = base.rank();
    if !base.is_invertible(g)
        || base.product(g, g) != [(base.unit(), 1)]
    {
        return Err(FusionError::NotInvolution(base.label_name(g).to_string()));
    }
    let gx: Vec<usize> = (0..r).map(|x| base.invertible_action(g, x)).collect();
    // orbits
    let mut lift: Vec<LiftClass> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let mut class_of = vec![usize::MAX; r]; // base label -> quotient label (split: P index)
    let mut fixed: Option<usize> = None;
    let better = |a: usize, b: usize| -> bool {
        match priority {
            Some(p) => (p[a], a) < (p[b], b),
            None => a < b,
        }
    };
    for x in 0..r {
        if class_of[x] != usize::MAX {
            continue;
        }
        let y = gx[x];
        if y == x {
            if fixed.is_some() {
                return Err(FusionError::AxiomViolation(
                    "multiple fixed points are outside this solver's scope".into(),
                ));
            }
            fixed = Some(x);
            class_of[x] = usize::MAX - 1; // placeholder, resolved below
        } else {
            let rep = if better(x, y) { x } else { y };
            let partner = if rep == x { y } else { x };
            lift.push(LiftClass::Orbit { rep, partner });
            labels.push(base.label_name(rep).to_string());
            class_of[x] = lift.len() - 1;
            class_of[y] = lift.len() - 1;
        }
    }
    let n_free = lift.len();
    let (p_idx, q_idx) = (n_free, n_free + 1);
    if let Some(xf) = fixed {
        lift.push(LiftClass::Split { fixed: xf, positive: true });
        lift.push(LiftClass::Split { fixed: xf, positive: false });
        labels.push("P".into());
        labels.push("Q".into());
    }
    let rank = lift.len();
    let rep_of = |c: usize| -> usize {
        match lift[c] {
            LiftClass::Orbit { rep, .. } => rep,
            LiftClass::Split { fixed, .. } => fixed,
        }
    };
    // unit and duals of free part
    let unit = class_of[base.unit()];
    // dims
    let mut dims: Vec<Cyc> = Vec::with_capacity(rank);
    for c in 0..rank {
        let d = base.dim(rep_of(c)).clone();
        match lift[c] {
            LiftClass::Orbit { .. } => dims.push(d),
            LiftClass::Split { .. } => dims.push(d.scale(&crate::tl::rational(1, 2))),
        }
    }
    // grading (must be orbit-constant when present)
    let grade: Option<Vec<u8>> = base.grading().and_then(|gr| {
        let mut out = Vec::with_capacity(rank);
        for c in 0..rank {
            match lift[c] {
                LiftClass::Orbit { rep, partner } => {
                    if gr[rep] != gr[partner] {
                        return None;
                    }
                    out.push(gr[rep]);
                }
                LiftClass::Split { fixed, .. } => out.push(gr[fixed]),
            }
        }
        Some(out)
    });
    // determined products
    let mut prod: Vec<Vec<Vec<(usize, u32)>>> = vec![vec![Vec::new(); rank]; rank];
    for a in 0..n_free {
        let xa = rep_of(a);
        for b in 0..n_free {
            let xb = rep_of(b);
            let mut dense = vec![0u32; rank];
            for &(z, nz) in base.product(xa, xb) {
                let c = class_of[z];
                if c == usize::MAX - 1 {
                    // fixed point: contributes to both halves
                    dense[p_idx] += nz;
                    dense[q_idx] += nz;
                } else if matches!(lift[c], LiftClass::Orbit { rep, .. } if rep == z) {
                    dense[c] += nz;
                } else {
                    // partner representative: same orbit coefficient,
                    // accumulate once per base label
                    dense[c] += nz;
                }
            }
            // orbit coefficients were accumulated over both representatives;
            // but the rule is N^{[c]} = N(x,y,c) + N(x,y,gc), which is what
            // the loop above produced
            prod[a][b] = sparse_from_dense(&dense);
        }
    }
    // duals of free labels
    let mut dual = vec![usize::MAX; rank];
    for a in 0..n_free {
        dual[a] = class_of[base.dual(rep_of(a))];
        if dual[a] == usize::MAX - 1 {
            return Err(FusionError::AxiomViolation(
                "dual of a free orbit cannot be the fixed point".into(),
            ));
        }
    }
    if fixed.is_none() {
        let ring = FusionRing::new(
            format!("{}//{}", base.name, base.label_name(g)),
            labels,
            unit,
            dual,
            grade,
            prod,
            dims,
        );
        return Ok(vec![DeEq { ring, lift, g }]);
    }
    let xf = fixed.unwrap();
    if base.dual(xf) != xf {
        return Err(FusionError::AxiomViolation("fixed point must be self-dual".into()));
    }
    // determined rows P x free (half of the lift row, which is g-stable)
    // N_{P,[a]}^{[c]} = N(xf, a_rep, c_rep); c_a := N(xf, a, xf)
    for a in 0..n_free {
        let xa = rep_of(a);
        let mut dense = vec![0u32; rank];
        for &(z, nz) in base.product(xf, xa) {
            if z == xf {
                continue; // handled by the unknowns p_a below
            }
            let c = class_of[z];
            // N(xf,a,z) = N(xf,a,gz): each base label pair contributes the
            // same amount; take the value on the representative only
            if matches!(lift[c], LiftClass::Orbit { rep, .. } if rep == z) {
                dense[c] = nz;
            }
        }
        prod[p_idx][a] = sparse_from_dense(&dense);
        prod[q_idx][a] = prod[p_idx][a].clone();
    }
    let c_a: Vec<u32> = (0..n_free).map(|a| base.n(xf, rep_of(a), xf)).collect();
    let c_f = base.n(xf, xf, xf);
    // unknowns: dual_p (P*=P?), p_a in 0..=c_a, and (w, y, z) with w+2y+z=c_f
    let mut solutions: Vec<SplitSolution> = Vec::new();
    let free_sum: Vec<u32> = {
        // N_{PP}^{[c]} + N_{PQ}^{[c]} (+ symmetric) relate to the lift of
        // xf⊗xf: coefficient of [c]: N(xf,xf,c) + N(xf,xf,gc)
        (0..n_free)
            .map(|cidx| {
                let (rep, partner) = match lift[cidx] {
                    LiftClass::Orbit { rep, partner } => (rep, partner),
                    _ => unreachable!(),
                };
                base.n(xf, xf, rep) + base.n(xf, xf, partner)
            })
            .collect()
    };
    for dual_p_is_p in [true, false] {
        if let Some(required) = split_self_dual {
            if dual_p_is_p != required {
                continue;
            }
        }
        // enumerate (w, y, z)
        for w in 0..=c_f {
            for y in 0..=(c_f - w) / 2 {
                let z = c_f - w - 2 * y;
                // p_a search with propagation
                let mut p = vec![u32::MAX; n_free];
                p[unit] = 1; // unit law
                if c_a[unit] != 1 {
                    continue;
                }
                solve_split(
                    base,
                    &lift,
                    n_free,
                    xf,
                    &c_a,
                    &free_sum,
                    dual_p_is_p,
                    w,
                    y,
                    z,
                    &mut p,
                    0,
                    &mut solutions,
                );
            }
        }
    }
    // deduplicate identical solutions
    solutions.sort();
    solutions.dedup();
    // assemble candidate rings and keep those passing full verification
    let mut valid: Vec<(SplitSolution, FusionRing)> = Vec::new();
    for sol in solutions {
        let ring = assemble_split_ring(
            base, &lift, n_free, xf, g, &labels, unit, &dual, &grade, &prod, &dims, &sol,
        );
        if ring.verify(200, 7).is_ok() {
            valid.push((sol, ring));
        }
    }
    Ok(valid
        .into_iter()
        .map(|(_, ring)| DeEq { ring, lift: lift.clone(), g })
        .collect())
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct SplitSolution {
    dual_p_is_p: bool,
    p: Vec<u32>,
    w: u32,
    y: u32,
    z: u32,
}

#[allow(clippy::too_many_arguments)]
fn solve_split(
    base: &FusionRing,
    lift: &[LiftClass],
    n_free: usize,
    xf: usize,
    c_a: &[u32],
    free_sum: &[u32],
    dual_p_is_p: bool,
    w: u32,
    y: u32,
    z: u32,
    p: &mut Vec<u32>,
    next: usize,
    out: &mut Vec<SplitSolution>,
) {
    // find next unassigned
    let mut idx = next;
    while idx < n_free && p[idx] != u32::MAX {
        idx += 1;
    }
    if idx == n_free {
        let sol = SplitSolution { dual_p_is_p, p: p.clone(), w, y, z };
        if split_constraints_ok(base, lift, n_free, xf, c_a, free_sum, &sol, true) {
            out.push(sol);
        }
        return;
    }
    for val in 0..=c_a[idx] {
        p[idx] = val;
        let sol = SplitSolution { dual_p_is_p, p: p.clone(), w, y, z };
        if split_constraints_ok(base, lift, n_free, xf, c_a, free_sum, &sol, false) {
            solve_split(
                base, lift, n_free, xf, c_a, free_sum, dual_p_is_p, w, y, z, p, idx + 1, out,
            );
        }
    }
    p[idx] = u32::MAX;
}

/// Check the associativity constraints `(P·a)·b = P·(a·b)` in the
/// P-coefficient, restricted (when `partial`) to pairs whose unknowns are
/// all assigned, plus duality constraints on assigned values.
#[allow(clippy::too_many_arguments)]
fn split_constraints_ok(
    base: &FusionRing,
    lift: &[LiftClass],
    n_free: usize,
    xf: usize,
    c_a: &[u32],
    _free_sum: &[u32],
    sol: &SplitSolution,
    full: bool,
) -> bool {
    let rep_of = |c: usize| -> usize {
        match lift[c] {
            LiftClass::Orbit { rep, .. } => rep,
            LiftClass::Split { fixed, .. } => fixed,
        }
    };
    let class_of_base: Vec<usize> = {
        let mut v = vec![usize::MAX; base.rank()];
        for (c, lc) in lift.iter().enumerate().take(n_free) {
            if let LiftClass::Orbit { rep, partner } = lc {
                v[*rep] = c;
                v[*partner] = c;
            }
        }
        v[xf] = usize::MAX - 1;
        v
    };
    let assigned = |a: usize| sol.p[a] != u32::MAX;
    // dual constraint: N_{P,a}^{P} relates to N_{P,a*}^{P} through T-symmetry:
    // T(P, a, b) known; T(P, P, a) = p_{a*} (P*=P) or c_{a*}-p_{a*} (P*=Q);
    // consistency needed: T(P,P,a) = T(P,P,a) trivially. The real constraints
    // are the associativity equations below.
    let dual_class =
        |a: usize| -> usize { class_of_base[base.dual(rep_of(a))] };
    let npp_free = |cidx: usize| -> Option<u32> {
        // N_{PP}^{[c]} = T(P,P,[c]*) = p_{c*} or q_{c*}
        let dc = dual_class(cidx);
        if !assigned(dc) {
            return None;
        }
        Some(if sol.dual_p_is_p { sol.p[dc] } else { c_a[dc] - sol.p[dc] })
    };
    let npq_free = |cidx: usize| -> Option<u32> {
        let dc = dual_class(cidx);
        if !assigned(dc) {
            return None;
        }
        Some(if sol.dual_p_is_p { c_a[dc] - sol.p[dc] } else { sol.p[dc] })
    };
    // associativity in the P-coefficient of (P·a)·b vs P·(a·b)
    for a in 0..n_free {
        if !assigned(a) {
            continue;
        }
        for b in a..n_free {
            if !assigned(b) {
                continue;
            }
            if !full {
                // during search, check only pairs where the right-hand side
                // is also fully assigned
                let mut ok = true;
                for &(d, _) in base.product(rep_of(a), rep_of(b)) {
                    let dc = class_of_base[d];
                    if dc < n_free && !assigned(dc) {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    continue;
                }
            }
            // LHS: coeff of P in (P·a)·b
            // = sum_c N_{Pa}^{[c]} N_{[c]b}^{P} + p_a p_b + q_a q_b
            let xa = rep_of(a);
            let xb = rep_of(b);
            let mut lhs: u64 = 0;
            for &(zc, nz) in base.product(xf, xa) {
                if zc == xf {
                    continue;
                }
                let cc = class_of_base[zc];
                if let LiftClass::Orbit { rep, .. } = lift[cc] {
                    if rep == zc {
                        // N_{[c]b}^{P} = N(c_rep, b, xf)
                        lhs += nz as u64 * base.n(zc, xb, xf) as u64;
                    }
                }
            }
            let pa = sol.p[a];
            let qa = c_a[a] - pa;
            let pb = sol.p[b];
            let qb = c_a[b] - pb;
            lhs += pa as u64 * pb as u64 + qa as u64 * qb as u64;
            // RHS: coeff of P in P·(a·b)
            // = sum_d N_{ab}^{[d]} p_d + N(a,b,xf) (w + y)
            let mut rhs: u64 = 0;
            let mut incomplete = false;
            for &(d, nd) in base.product(xa, xb) {
                if d == xf {
                    rhs += nd as u64 * (sol.w + sol.y) as u64;
                    continue;
                }
                let dc = class_of_base[d];
                if !assigned(dc) {
                    incomplete = true;
                    break;
                }
                rhs += nd as u64 * sol.p[dc] as u64;
            }
            if incomplete {
                continue;
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    if full {
        // associativity of (P·P)·a vs P·(P·a) in the unit coefficient and in
        // the [a] coefficients is covered by the full ring verification that
        // follows assembly; here check the split block sum rules involving
        // npp/npq on duals where defined
        for cidx in 0..n_free {
            if let (Some(pp), Some(pq)) = (npp_free(cidx), npq_free(cidx)) {
                // (P+Q)⊗(P+Q) carries the g-stable lift of xf⊗xf; with the
                // P<->Q symmetry each of the four blocks gets half
                let (rep, partner) = match lift[cidx] {
                    LiftClass::Orbit { rep, partner } => (rep, partner),
                    _ => unreachable!(),
                };
                let total = base.n(xf, xf, rep) + base.n(xf, xf, partner);
                if 2 * (pp + pq) != total {
                    return false;
                }
            }
        }
    }
    true
}

#[allow(clippy::too_many_arguments)]
fn assemble_split_ring(
    base: &FusionRing,
    lift: &[LiftClass],
    n_free: usize,
    xf: usize,
    g: usize,
    labels: &[String],
    unit: usize,
    dual_free: &[usize],
    grade: &Option<Vec<u8>>,
    prod_known: &[Vec<Vec<(usize, u32)>>],
    dims: &[Cyc],
    sol: &SplitSolution,
) -> FusionRing {
    let rank = lift.len();
    let (p_idx, q_idx) = (n_free, n_free + 1);
    let rep_of = |c: usize| -> usize {
        match lift[c] {
            LiftClass::Orbit { rep, .. } => rep,
            LiftClass::Split { fixed, .. } => fixed,
        }
    };
    let class_of_base: Vec<usize> = {
        let mut v = vec![usize::MAX; base.rank()];
        for (c, lc) in lift.iter().enumerate().take(n_free) {
            if let LiftClass::Orbit { rep, partner } = lc {
                v[*rep] = c;
                v[*partner] = c;
            }
        }
        v[xf] = p_idx;
        v
    };
    let mut prod = prod_known.to_vec();
    let mut dual = dual_free.to_vec();
    dual[p_idx] = if sol.dual_p_is_p { p_idx } else { q_idx };
    dual[q_idx] = if sol.dual_p_is_p { q_idx } else { p_idx };
    let dual_class = |a: usize| -> usize { class_of_base[base.dual(rep_of(a))] };
    // split rows against free labels: P·a gets p_a P + q_a Q appended
    for a in 0..n_free {
        let pa = sol.p[a];
        let qa = base.n(xf, rep_of(a), xf) - pa;
        let mut rowp = prod[p_idx][a].clone();
        if pa > 0 {
            rowp.push((p_idx, pa));
        }
        if qa > 0 {
            rowp.push((q_idx, qa));
        }
        rowp.sort_unstable();
        let mut rowq = prod[q_idx][a].clone();
        if qa > 0 {
            rowq.push((p_idx, qa));
        }
        if pa > 0 {
            rowq.push((q_idx, pa));
        }
        rowq.sort_unstable();
        prod[p_idx][a] = rowp;
        prod[q_idx][a] = rowq;
        prod[a][p_idx] = prod[p_idx][a].clone();
        prod[a][q_idx] = prod[q_idx][a].clone();
    }
    // split x split
    let npp_free = |cidx: usize| -> u32 {
        let dc = dual_class(cidx);
        if sol.dual_p_is_p {
            sol.p[dc]
        } else {
            base.n(xf, rep_of(dc), xf) - sol.p[dc]
        }
    };
    let npq_free = |cidx: usize| -> u32 {
        let dc = dual_class(cidx);
        if sol.dual_p_is_p {
            base.n(xf, rep_of(dc), xf) - sol.p[dc]
        } else {
            sol.p[dc]
        }
    };
    let mut pp = vec![0u32; rank];
    let mut pq = vec![0u32; rank];
    for c in 0..n_free {
        pp[c] = npp_free(c);
        pq[c] = npq_free(c);
    }
    // split coefficients: w = N_{PP}^P and z = N_{PP}^Q by definition;
    // Frobenius ties one of them to y depending on the duality, which the
    // final ring verification enforces
    pp[p_idx] = sol.w;
    pp[q_idx] = sol.z;
    pq[p_idx] = sol.y;
    pq[q_idx] = sol.y;
    prod[p_idx][p_idx] = sparse_from_dense(&pp);
    prod[q_idx][q_idx] = {
        // sigma image: swap P and Q coefficients
        let mut qq = pp.clone();
        qq.swap(p_idx, q_idx);
        sparse_from_dense(&qq)
    };
    prod[p_idx][q_idx] = sparse_from_dense(&pq);
    prod[q_idx][p_idx] = prod[p_idx][q_idx].clone();
    FusionRing::new(
        format!("{}//{}", base.name, base.label_name(g)),
        labels.to_vec(),
        unit,
        dual,
        grade.clone(),
        prod,
        dims.to_vec(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::two_cos;

    #[test]
    fn verlinde_basics() {
        let a3 = verlinde_ring(3);
        assert_eq!(a3.rank(), 3);
        // f1 ⊗ f1 = f0 ⊕ f2
        assert_eq!(a3.product(1, 1), &[(0, 1), (2, 1)]);
        a3.verify(200, 1).unwrap();
        // A4: f3 ⊗ f3 = f0 (invertible top label)
        let a4 = verlinde_ring(4);
        assert_eq!(a4.product(3, 3), &[(0, 1)]);
        a4.verify(200, 1).unwrap();
        // multiplication by f1 is the Dynkin chain adjacency
        let a6 = verlinde_ring(6);
        for a in 0usize..6 {
            for c in 0..6 {
                let expect = u32::from(a.abs_diff(c) == 1);
                assert_eq!(a6.n(1, a, c), expect);
            }
        }
        a6.verify(200, 1).unwrap();
    }

    #[test]
    fn adjoint_examples() {
        let ad5 = adjoint_subring(&verlinde_ring(5)).unwrap();
        assert_eq!(ad5.labels(), &["f0", "f2", "f4"]);
        // f2 ⊗ f2 = f0 ⊕ f2 ⊕ f4
        assert_eq!(ad5.product(1, 1), &[(0, 1), (1, 1), (2, 1)]);
        ad5.verify(200, 1).unwrap();
        let ad4 = adjoint_subring(&verlinde_ring(4)).unwrap();
        assert_eq!(ad4.rank(), 2);
        // adjoint of a trivially graded ring is itself
        let again = adjoint_subring(&ad4).unwrap();
        assert_eq!(again.rank(), ad4.rank());
        assert_eq!(again.product(1, 1), ad4.product(1, 1));
    }

    #[test]
    fn product_examples() {
        let a11 = verlinde_ring(11);
        let a3 = verlinde_ring(3);
        let z = deligne_product(&a11, &a3);
        assert_eq!(z.rank(), 33);
        assert_eq!(z.unit(), 0);
        assert!(z.dim(0).is_one());
        // dims multiply across factors
        let idx = 1 * 3 + 1; // f1 ⊠ f1
        assert_eq!(z.dim(idx), &a11.dim(1).mul(a3.dim(1)));
        z.verify(40, 1).unwrap();
    }

    #[test]
    fn de_equivariantize_d_series() {
        // A5 // f4 has the D4 fusion graph: f2 splits into P, Q with Z/3 ad
        let a5 = verlinde_ring(5);
        let g = a5.label_index("f4").unwrap();
        let d4 = de_equivariantize(&a5, g, None).unwrap();
        assert_eq!(d4.ring.rank(), 4); // f0, f1, P, Q
        d4.ring.verify(200, 1).unwrap();
        let ad_d4 = adjoint_subring(&d4.ring).unwrap();
        assert_eq!(ad_d4.rank(), 3);
        // Vec(Z/3) fusion: P ⊗ P = Q, P ⊗ Q = 1
        let p = ad_d4.label_index("P").unwrap();
        let q = ad_d4.label_index("Q").unwrap();
        let u = ad_d4.unit();
        assert_eq!(ad_d4.n(p, p, q), 1);
        assert_eq!(ad_d4.n(p, q, u), 1);
        assert!(ad_d4.dims().iter().all(|d| d.is_one()));
        // sum rule: P + Q multiplies as the lift of f2
        let sum = ad_d4.mul_vec(
            &ObjVec::from(vec![0, 1, 1]),
            &ObjVec::from(vec![0, 1, 1]),
        );
        // (P+Q)^2 = lift of f2⊗f2 in A5 pushed down: f0+f2+f4 -> 2*1 + (P+Q)
        assert_eq!(sum, vec![2, 1, 1]);
    }

    #[test]
    fn de_equivariantize_d10() {
        // A17 // f16 = D10; its adjoint has the S3-symmetric fusion
        let a17 = verlinde_ring(17);
        let g = a17.label_index("f16").unwrap();
        let d10 = de_equivariantize(&a17, g, None).unwrap();
        assert_eq!(d10.ring.rank(), 10);
        d10.ring.verify(200, 1).unwrap();
        let ad = adjoint_subring(&d10.ring).unwrap();
        assert_eq!(ad.rank(), 6);
        ad.verify(200, 1).unwrap();
        let f2 = ad.label_index("f2").unwrap();
        let f4 = ad.label_index("f4").unwrap();
        let p = ad.label_index("P").unwrap();
        let q = ad.label_index("Q").unwrap();
        // P ⊗ P = 1 ⊕ f4 ⊕ P (S3 symmetry with f2)
        assert_eq!(ad.n(p, p, ad.unit()), 1);
        assert_eq!(ad.n(p, p, f4), 1);
        assert_eq!(ad.n(p, p, p), 1);
        assert_eq!(ad.n(p, p, q), 0);
        assert_eq!(ad.n(p, p, f2), 0);
        // P ⊗ Q = f2 ⊕ f6
        let f6 = ad.label_index("f6").unwrap();
        assert_eq!(ad.n(p, q, f2), 1);
        assert_eq!(ad.n(p, q, f6), 1);
        assert_eq!(ad.n(p, q, ad.unit()), 0);
        // dims: f2 and P, Q share the dimension [3] = [9]/2
        assert_eq!(ad.dim(f2), ad.dim(p));
        assert_eq!(ad.dim(p), ad.dim(q));
        // dim(1 ⊕ f6) = 1 + cos(pi/9) csc(pi/18) ~ 6.411
        let alg = ad.dim_of_vec(&vec![1, 0, 0, 1, 0, 0]);
        let expect = 1.0
            + (std::f64::consts::PI / 9.0).cos() / (std::f64::consts::PI / 18.0).sin();
        assert!((alg.embed().0 - expect).abs() < 1e-9);
    }

    #[test]
    fn ring_automorphism_counts() {
        // ad(A_{2N}) has no non-trivial automorphisms
        let ad4 = adjoint_subring(&verlinde_ring(4)).unwrap();
        assert_eq!(ad4.ring_automorphisms().len(), 1);
        let ad6 = adjoint_subring(&verlinde_ring(6)).unwrap();
        assert_eq!(ad6.ring_automorphisms().len(), 1);
        // ad(D10): all permutations of f2, P, Q
        let a17 = verlinde_ring(17);
        let d10 = de_equivariantize(&a17, a17.label_index("f16").unwrap(), None).unwrap();
        let ad = adjoint_subring(&d10.ring).unwrap();
        assert_eq!(ad.ring_automorphisms().len(), 6);
    }

    #[test]
    fn fp_dims_are_perron() {
        // the stored dims agree with the numeric Perron eigenvector of the
        // generator's fusion matrix, normalised at the unit
        let ring = adjoint_subring(&verlinde_ring(7)).unwrap();
        // generator f2: power iteration
        let g = ring.label_index("f2").unwrap();
        let r = ring.rank();
        let mut v = vec![1.0f64; r];
        for _ in 0..2000 {
            let mut w = vec![0.0; r];
            for i in 0..r {
                for &(k, n) in ring.product(g, i) {
                    w[k] += n as f64 * v[i];
                }
            }
            let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            v = w.into_iter().map(|x| x / norm).collect();
        }
        let scale = v[ring.unit()];
        for i in 0..r {
            assert!((v[i] / scale - ring.dim(i).embed().0).abs() < 1e-8);
        }
        // dims homomorphism on a random-ish vector pair
        let a: ObjVec = vec![1, 2, 0, 1].into_iter().chain(std::iter::repeat(0)).take(r).collect();
        let b: ObjVec = (0..r as u64).map(|i| i % 3).collect();
        let ab = ring.mul_vec(&a, &b);
        assert_eq!(
            ring.dim_of_vec(&a).mul(&ring.dim_of_vec(&b)),
            ring.dim_of_vec(&ab)
        );
    }

    #[test]
    fn json_round_trip() {
        let ring = adjoint_subring(&verlinde_ring(5)).unwrap();
        let j = ring.to_json();
        let back = FusionRing::from_json(&j).unwrap();
        assert_eq!(back.rank(), ring.rank());
        assert_eq!(back.product(1, 1), ring.product(1, 1));
        assert_eq!(back.dims(), ring.dims());
    }

    #[test]
    fn sqrt3_dims_exact() {
        // dims of ad(A11) are 1, 1+sqrt3, ... : check the exact value
        let ad = adjoint_subring(&verlinde_ring(11)).unwrap();
        let sqrt3 = two_cos(12, 1);
        let expect = Cyc::one().add(&sqrt3);
        assert_eq!(ad.dim(1), &expect);
    }
}

