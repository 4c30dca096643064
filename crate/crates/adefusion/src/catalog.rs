//! The named catalog of fusion rings and their braiding parameters.
//!
//! Grammar (also accepted by the CLI `--entry` flag):
//!
//! ```text
//! A:N[,q=deg|mod]      truncated A_N ring
//! adA:N                adjoint subring of A_N
//! D:2N                 D_2N ring (A_{4N-3} // f^{(4N-4)})
//! adD:2N               adjoint subring of D_2N
//! Z(adE6), Z(E6), Z(E8), Z(adE8)
//! Z(A:N[,q=..]), Z(adA:N), Z(D:2N), Z(adD:2N)
//! X⊠Y                  Deligne product of entries (ASCII alias: X*Y)
//! X^bop                reverse the braiding of X
//! ```
//!
//! Each entry carries, per braided factor, the root-of-unity data needed to
//! compute twists: an ambient `A_N` index, the conductor on which `q^{1/2}`
//! lives, a default exponent, and the braiding kind. Each ring label is
//! tagged with the factor curls whose product is its twist.

use crate::cyclo::Cyc;
use crate::fusion::{
    adjoint_subring, de_equivariantize, de_equivariantize_with, deligne_product_many,
    verlinde_ring, FusionError, FusionRing, LiftClass,
};
use crate::tl::BraidKind;

/// Root-of-unity and braiding data for one braided tensor factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    /// human name, e.g. `A11` or `adD10`
    pub name: String,
    /// the ambient Verlinde index: labels are `f^k` of this `A_N`
    pub ambient_n: usize,
    /// conductor of `q^{1/2}`: `q_half = zeta_{half_conductor}^{exponent}`
    pub half_conductor: u32,
    /// current exponent of `q^{1/2}` (calibration may change it)
    pub half_exponent: i64,
    pub kind: BraidKind,
}

impl Factor {
    pub fn braid(&self) -> crate::tl::BraidParams {
        crate::tl::BraidParams::new(
            Cyc::root_of_unity(self.half_conductor, self.half_exponent),
            self.kind,
        )
    }

    pub fn q(&self) -> Cyc {
        self.braid().q()
    }

    /// All admissible `(half_exponent, kind)` assignments: `q = q_half^2`
    /// must satisfy `ord(q^2) = ambient_n + 1` (the `f^(N) = 0` quotient).
    pub fn admissible_assignments(&self) -> Vec<(i64, BraidKind)> {
        let m = self.half_conductor;
        let target = (self.ambient_n + 1) as u64;
        let mut out = Vec::new();
        for e in 0..m as i64 {
            // order of zeta_m^{4e} must be ambient_n+1
            let g = num::integer::gcd(4 * e as u64 % m as u64, m as u64);
            let ord = m as u64 / num::integer::gcd(4 * e as u64 % m as u64, m as u64);
            let _ = g;
            if ord == target {
                out.push((e, BraidKind::Standard));
                out.push((e, BraidKind::Bop));
            }
        }
        out
    }
}

/// How a catalog ring was assembled, with the bookkeeping the later stages
/// need.
#[derive(Clone, Debug)]
pub enum Structure {
    /// A plain singly-built ring (A, adA, D, adD).
    Plain,
    /// Deligne product; label index = row-major multi-index over the factor
    /// ring ranks.
    Product { factor_ranks: Vec<usize>, factor_entries: Vec<Entry> },
    /// De-equivariantization of the even part of `A_n1 ⊠ A_n2`.
    CentreDeEq {
        n1: usize,
        n2: usize,
        /// per quotient label: the lift into pairs `(a, b)` of Verlinde labels
        lift_pairs: Vec<LiftPairs>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftPairs {
    Orbit { rep: (usize, usize), partner: (usize, usize) },
    Split { fixed: (usize, usize), positive: bool },
}

/// Per-label twist recipe: the twist is the product of the curls of the
/// listed `(factor, A-label)` pairs.
pub type TwistTag = Vec<(usize, usize)>;

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub ring: FusionRing,
    /// braided factors; empty for unbraided rings such as `D:2N`
    pub factors: Vec<Factor>,
    /// per-label twist recipe (present iff the entry is braided)
    pub twist_tags: Option<Vec<TwistTag>>,
    pub structure: Structure,
    /// for `Z(...)` entries: the catalog name of the base category
    pub base_name: Option<String>,
}

impl Entry {
    pub fn is_braided(&self) -> bool {
        self.twist_tags.is_some()
    }

    /// Reverse every factor braiding (the `^bop` operation).
    pub fn bop(mut self) -> Entry {
        for f in &mut self.factors {
            f.kind = f.kind.reversed();
            f.name = match f.name.strip_suffix("^bop") {
                Some(base) => base.to_string(),
                None => format!("{}^bop", f.name),
            };
        }
        self.name = match self.name.strip_suffix("^bop") {
            Some(base) => base.to_string(),
            None => format!("{}^bop", self.name),
        };
        if let Structure::Product { factor_entries, .. } = &mut self.structure {
            for e in factor_entries.iter_mut() {
                *e = e.clone().bop();
            }
        }
        self
    }
}

fn factor_a(n: usize) -> Factor {
    Factor {
        name: format!("A{n}"),
        ambient_n: n,
        half_conductor: 4 * (n as u32 + 1),
        half_exponent: 1,
        kind: BraidKind::Standard,
    }
}

/// `A_{2N}` at the degenerate root `q = e^{i pi/(2N+1)}` or the modular one
/// `q = e^{2 i pi/(2N+1)}`.
fn factor_a_variant(n: usize, modular: bool) -> Factor {
    let mut f = factor_a(n);
    if modular {
        f.half_exponent = 2;
    }
    f
}

fn factor_ad_d(two_n: usize) -> Factor {
    // ambient A_{4N-3} with q a primitive (8N-4)-th root
    let n = two_n / 2;
    let amb = 4 * n - 3;
    Factor {
        name: format!("adD{two_n}"),
        ambient_n: amb,
        half_conductor: 4 * (amb as u32 + 1),
        half_exponent: 1,
        kind: BraidKind::Standard,
    }
}

fn a_entry(n: usize, variant: Option<bool>) -> Entry {
    let ring = verlinde_ring(n);
    let f = match variant {
        None => factor_a(n),
        Some(modular) => factor_a_variant(n, modular),
    };
    let tags = (0..n).map(|k| vec![(0usize, k)]).collect();
    let name = match variant {
        None => format!("A:{n}"),
        Some(true) => format!("A:{n},q=mod"),
        Some(false) => format!("A:{n},q=deg"),
    };
    Entry {
        name,
        ring,
        factors: vec![f],
        twist_tags: Some(tags),
        structure: Structure::Plain,
        base_name: None,
    }
}

fn ad_a_entry(n: usize) -> Entry {
    let base = verlinde_ring(n);
    let ring = adjoint_subring(&base).expect("A_N is graded");
    // labels are f^{2k}: twist tag = curl of the even ambient label
    let tags = (0..ring.rank()).map(|k| vec![(0usize, 2 * k)]).collect();
    // the adjoint inherits the deg representative for even N
    let f = if n % 2 == 0 { factor_a_variant(n, false) } else { factor_a(n) };
    Entry {
        name: format!("adA:{n}"),
        ring,
        factors: vec![f],
        twist_tags: Some(tags),
        structure: Structure::Plain,
        base_name: None,
    }
}

/// `D_{2N}` as the de-equivariantization `A_{4N-3} // f^{(4N-4)}`.
fn d_entry(two_n: usize) -> Result<Entry, FusionError> {
    assert!(two_n % 2 == 0 && two_n >= 4);
    let n = two_n / 2;
    let amb = verlinde_ring(4 * n - 3);
    let g = amb.rank() - 1;
    let dee = de_equivariantize(&amb, g, None)?;
    let mut ring = dee.ring;
    ring.name = format!("D{two_n}");
    Ok(Entry {
        name: format!("D:{two_n}"),
        ring,
        factors: vec![],
        twist_tags: None, // D_2N itself carries no braiding
        structure: Structure::Plain,
        base_name: None,
    })
}

/// `ad(D_{2N})` with its cabled braiding: twists are ambient even curls.
fn ad_d_entry(two_n: usize) -> Result<Entry, FusionError> {
    let n = two_n / 2;
    let amb = verlinde_ring(4 * n - 3);
    let g = amb.rank() - 1;
    let dee = de_equivariantize(&amb, g, None)?;
    let mut ring = adjoint_subring(&dee.ring)?;
    ring.name = format!("adD{two_n}");
    // twist tags: even labels f^{2k} tag ambient 2k; P, Q tag the fixed point
    let mut tags = Vec::with_capacity(ring.rank());
    for i in 0..ring.rank() {
        let name = ring.label_name(i);
        if name == "P" || name == "Q" {
            tags.push(vec![(0usize, 2 * n - 2)]);
        } else {
            let k: usize = name.trim_start_matches('f').parse().unwrap();
            tags.push(vec![(0usize, k)]);
        }
    }
    Ok(Entry {
        name: format!("adD:{two_n}"),
        ring,
        factors: vec![factor_ad_d(two_n)],
        twist_tags: Some(tags),
        structure: Structure::Plain,
        base_name: None,
    })
}

/// Deligne product of braided entries.
pub fn product_entry(parts: Vec<Entry>) -> Entry {
    let rings: Vec<&FusionRing> = parts.iter().map(|e| &e.ring).collect();
    let ring = deligne_product_many(&rings);
    let factor_ranks: Vec<usize> = parts.iter().map(|e| e.ring.rank()).collect();
    // factor index offsets for twist tags
    let mut offsets = Vec::with_capacity(parts.len());
    let mut total_factors = 0;
    for e in &parts {
        offsets.push(total_factors);
        total_factors += e.factors.len();
    }
    let braided = parts.iter().all(|e| e.is_braided());
    let twist_tags = if braided {
        let mut tags: Vec<TwistTag> = Vec::with_capacity(ring.rank());
        for idx in 0..ring.rank() {
            // decode the row-major multi-index
            let mut rem = idx;
            let mut multi = vec![0usize; parts.len()];
            for f in (0..parts.len()).rev() {
                multi[f] = rem % factor_ranks[f];
                rem /= factor_ranks[f];
            }
            let mut tag = Vec::new();
            for (f, &li) in multi.iter().enumerate() {
                let part_tags = parts[f].twist_tags.as_ref().unwrap();
                for &(fa, al) in &part_tags[li] {
                    tag.push((offsets[f] + fa, al));
                }
            }
            tags.push(tag);
        }
        Some(tags)
    } else {
        None
    };
    let factors = parts.iter().flat_map(|e| e.factors.clone()).collect();
    let name = parts.iter().map(|e| e.name.clone()).collect::<Vec<_>>().join("⊠");
    Entry {
        name,
        ring,
        factors,
        twist_tags,
        structure: Structure::Product {
            factor_ranks,
            factor_entries: parts,
        },
        base_name: None,
    }
}

/// The centre of an odd adjoint category: de-equivariantize the even part of
/// `A_{n1} ⊠ A_{n2}^bop` by the invertible `(g1, g2)`.
fn centre_deeq_entry(
    name: String,
    n1: usize,
    n2: usize,
    f1: Factor,
    f2: Factor,
    g_pair: (usize, usize),
    base_name: Option<String>,
) -> Result<Entry, FusionError> {
    let a1 = verlinde_ring(n1);
    let a2 = verlinde_ring(n2);
    let full = crate::fusion::deligne_product(&a1, &a2);
    let even = adjoint_subring(&full)?;
    // even label index -> pair
    let pair_of = |even_ring: &FusionRing, i: usize| -> (usize, usize) {
        let nm = even_ring.label_name(i);
        let (l, r) = nm.split_once('⊠').unwrap();
        (
            l.trim_start_matches('f').parse().unwrap(),
            r.trim_start_matches('f').parse().unwrap(),
        )
    };
    let g = even
        .label_index(&format!("f{}⊠f{}", g_pair.0, g_pair.1))
        .expect("distinguished invertible must be in the even part");
    // representative priority: smaller (a+b), then smaller b
    let prio: Vec<u64> = (0..even.rank())
        .map(|i| {
            let (a, b) = pair_of(&even, i);
            ((a + b) as u64) << 32 | b as u64
        })
        .collect();
    let mut cands = crate::fusion::de_equivariantize_candidates(&even, g, Some(&prio), Some(true))?;
    if cands.len() > 1 {
        // The pure ring axioms admit impostor quotients (for the rank-4 case
        // both the toric-code ring and Z/4). The centre carries twists from
        // the lift, and the monodromy matrix built from (N, t, dims) must
        // have character columns; only the true quotient passes.
        let f1b = f1.braid();
        let f2b = f2.braid();
        cands.retain(|cand| {
            let twists: Vec<Cyc> = cand
                .lift
                .iter()
                .map(|lc| {
                    let i = match *lc {
                        LiftClass::Orbit { rep, .. } => rep,
                        LiftClass::Split { fixed, .. } => fixed,
                    };
                    let (a, b) = pair_of(&even, i);
                    crate::tl::curl_value_unchecked(a, &f1b)
                        .mul(&crate::tl::curl_value_unchecked(b, &f2b))
                })
                .collect();
            monodromy_columns_are_characters(&cand.ring, &twists)
        });
    }
    let dee = match cands.len() {
        0 => return Err(FusionError::SplitSolverEmpty),
        1 => cands.pop().unwrap(),
        k => return Err(FusionError::SplitSolverAmbiguous(k)),
    };
    let lift_pairs: Vec<LiftPairs> = dee
        .lift
        .iter()
        .map(|lc| match *lc {
            LiftClass::Orbit { rep, partner } => LiftPairs::Orbit {
                rep: pair_of(&even, rep),
                partner: pair_of(&even, partner),
            },
            LiftClass::Split { fixed, positive } => {
                LiftPairs::Split { fixed: pair_of(&even, fixed), positive }
            }
        })
        .collect();
    let mut ring = dee.ring;
    ring.name = name.clone();
    let twist_tags: Vec<TwistTag> = lift_pairs
        .iter()
        .map(|lp| match *lp {
            LiftPairs::Orbit { rep: (a, b), .. } => vec![(0, a), (1, b)],
            LiftPairs::Split { fixed: (a, b), .. } => vec![(0, a), (1, b)],
        })
        .collect();
    Ok(Entry {
        name,
        ring,
        factors: vec![f1, f2],
        twist_tags: Some(twist_tags),
        structure: Structure::CentreDeEq { n1, n2, lift_pairs },
        base_name,
    })
}

/// Test whether the monodromy matrix `M_{ij} = sum_k N_ij^k (t_k/t_i t_j) d_k`
/// of a candidate ring with the given twists has character columns, i.e.
/// `lam_l(i) lam_l(j) = sum_k N_ij^k lam_l(k)` with `lam_l(i) = M_il/M_0l`.
/// This is the Verlinde-consistency check that separates the true
/// de-equivariantization from twist-incompatible impostor rings.
fn monodromy_columns_are_characters(ring: &FusionRing, twists: &[Cyc]) -> bool {
    let r = ring.rank();
    let mut m = vec![vec![Cyc::zero(1); r]; r];
    for i in 0..r {
        for j in 0..=i {
            let mut s = Cyc::zero(1);
            for &(k, n) in ring.product(i, j) {
                let term = twists[k]
                    .mul(ring.dim(k))
                    .scale(&num::BigRational::from_integer(n.into()));
                s = s.add(&term);
            }
            let v = s.mul(&twists[i].mul(&twists[j]).inv());
            m[i][j] = v.clone();
            m[j][i] = v;
        }
    }
    for l in 0..r {
        if m[ring.unit()][l].is_zero() {
            return false;
        }
        let inv0 = m[ring.unit()][l].inv();
        let lam: Vec<Cyc> = (0..r).map(|i| m[i][l].mul(&inv0)).collect();
        for i in 0..r {
            for j in 0..=i {
                let mut rhs = Cyc::zero(1);
                for &(k, n) in ring.product(i, j) {
                    rhs = rhs.add(&lam[k].scale(&num::BigRational::from_integer(n.into())));
                }
                if lam[i].mul(&lam[j]) != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Resolve a catalog name to an entry.
pub fn catalog(name: &str) -> Result<Entry, FusionError> {
    let name = name.trim();
    // products: split at top level on ⊠ or *
    if let Some(parts) = split_product(name) {
        if parts.len() > 1 {
            let entries = parts
                .into_iter()
                .map(catalog_factor)
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(product_entry(entries));
        }
    }
    catalog_factor(name)
}

fn split_product(name: &str) -> Option<Vec<&str>> {
    let mut depth = 0usize;
    let mut parts = Vec::new();
    let mut start = 0usize;
    for (i, ch) in name.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '⊠' | '*' if depth == 0 => {
                parts.push(name[start..i].trim());
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(name[start..].trim());
    Some(parts)
}

fn catalog_factor(name: &str) -> Result<Entry, FusionError> {
    let name = name.trim();
    if let Some(base) = name.strip_suffix("^bop") {
        return Ok(catalog_factor(base)?.bop());
    }
    if let Some(inner) = name.strip_prefix("Z(").and_then(|r| r.strip_suffix(')')) {
        return centre_of(inner.trim());
    }
    if let Some(rest) = name.strip_prefix("A:") {
        let (n, variant) = parse_a_args(rest)?;
        if n < 2 {
            return Err(FusionError::UnknownName(name.into()));
        }
        if n % 2 == 1 && variant.is_some() {
            return Err(FusionError::UnknownName(format!(
                "{name}: q variants exist only for even A indices"
            )));
        }
        return Ok(a_entry(n, variant));
    }
    if let Some(rest) = name.strip_prefix("adA:") {
        let n: usize = rest.parse().map_err(|_| FusionError::UnknownName(name.into()))?;
        if n < 2 {
            return Err(FusionError::UnknownName(name.into()));
        }
        return Ok(ad_a_entry(n));
    }
    if let Some(rest) = name.strip_prefix("D:") {
        let n: usize = rest.parse().map_err(|_| FusionError::UnknownName(name.into()))?;
        if n % 2 != 0 || n < 4 {
            return Err(FusionError::UnknownName(name.into()));
        }
        return d_entry(n);
    }
    if let Some(rest) = name.strip_prefix("adD:") {
        let n: usize = rest.parse().map_err(|_| FusionError::UnknownName(name.into()))?;
        if n % 2 != 0 || n < 4 {
            return Err(FusionError::UnknownName(name.into()));
        }
        return ad_d_entry(n);
    }
    Err(FusionError::UnknownName(name.into()))
}

fn parse_a_args(rest: &str) -> Result<(usize, Option<bool>), FusionError> {
    if let Some((n_str, q_str)) = rest.split_once(',') {
        let n = n_str
            .trim()
            .parse()
            .map_err(|_| FusionError::UnknownName(rest.into()))?;
        match q_str.trim() {
            "q=deg" => Ok((n, Some(false))),
            "q=mod" => Ok((n, Some(true))),
            other => Err(FusionError::UnknownName(other.into())),
        }
    } else {
        let n = rest.trim().parse().map_err(|_| FusionError::UnknownName(rest.into()))?;
        Ok((n, None))
    }
}

fn centre_of(inner: &str) -> Result<Entry, FusionError> {
    let base_name = inner.to_string();
    match inner {
        "E6" => {
            let mut e = product_entry(vec![a_entry(11, None), a_entry(3, None).bop()]);
            e.name = "Z(E6)".into();
            e.base_name = Some("E6".into());
            return Ok(e);
        }
        "E8" => {
            let mut e = product_entry(vec![a_entry(29, None), ad_a_entry(4).bop()]);
            e.name = "Z(E8)".into();
            e.base_name = Some("E8".into());
            return Ok(e);
        }
        "adE6" => {
            // de-equivariantize the even part of A11 ⊠ A3^bop by f10 ⊠ f2
            let f1 = factor_a(11);
            let f2 = Factor { kind: BraidKind::Bop, ..factor_a(3) };
            let mut e = centre_deeq_entry(
                "Z(adE6)".into(),
                11,
                3,
                f1,
                f2,
                (10, 2),
                Some("adE6".into()),
            )?;
            e.ring.name = "Z(adE6)".into();
            return Ok(e);
        }
        "adE8" => {
            let mut e = product_entry(vec![ad_d_entry(16)?, ad_a_entry(4).bop()]);
            e.name = "Z(adE8)".into();
            e.base_name = Some("adE8".into());
            return Ok(e);
        }
        _ => {}
    }
    if let Some(rest) = inner.strip_prefix("adA:") {
        let n: usize = rest.parse().map_err(|_| FusionError::UnknownName(inner.into()))?;
        if n % 2 == 0 {
            // ad(A_2N) admits a modular braiding: centre is the square
            let left = ad_a_entry(n);
            let right = ad_a_entry(n).bop();
            let mut e = product_entry(vec![left, right]);
            e.name = format!("Z(adA:{n})");
            e.base_name = Some(base_name);
            return Ok(e);
        }
        // odd: de-equivariantize even(A_n ⊠ A_n^bop) by (f^{n-1}, f^{n-1})
        let f1 = factor_a(n);
        let f2 = Factor { kind: BraidKind::Bop, ..factor_a(n) };
        let mut e = centre_deeq_entry(
            format!("Z(adA:{n})"),
            n,
            n,
            f1,
            f2,
            (n - 1, n - 1),
            Some(base_name),
        )?;
        e.ring.name = format!("Z(adA:{n})");
        return Ok(e);
    }
    if let Some(rest) = inner.strip_prefix("A:") {
        let (n, variant) = parse_a_args(rest)?;
        if n % 2 == 1 {
            let mut e = product_entry(vec![a_entry(n, None), a_entry(n, None).bop()]);
            e.name = format!("Z(A:{n})");
            e.base_name = Some(base_name);
            return Ok(e);
        }
        return match variant {
            Some(true) => {
                let mut e = product_entry(vec![
                    a_entry(n, Some(true)),
                    a_entry(n, Some(true)).bop(),
                ]);
                e.name = format!("Z(A:{n},q=mod)");
                e.base_name = Some(base_name);
                Ok(e)
            }
            Some(false) => {
                let toric = catalog_factor("Z(adA:3)")?;
                let mut e = product_entry(vec![ad_a_entry(n), ad_a_entry(n).bop(), toric]);
                e.name = format!("Z(A:{n},q=deg)");
                e.base_name = Some(base_name);
                Ok(e)
            }
            None => Err(FusionError::UnknownName(format!(
                "Z(A:{n}) needs q=deg or q=mod for even N"
            ))),
        };
    }
    if let Some(rest) = inner.strip_prefix("D:") {
        let two_n: usize = rest.parse().map_err(|_| FusionError::UnknownName(inner.into()))?;
        let n = two_n / 2;
        let mut e = product_entry(vec![a_entry(4 * n - 3, None), ad_d_entry(two_n)?.bop()]);
        e.name = format!("Z(D:{two_n})");
        e.base_name = Some(base_name);
        return Ok(e);
    }
    if let Some(rest) = inner.strip_prefix("adD:") {
        let two_n: usize = rest.parse().map_err(|_| FusionError::UnknownName(inner.into()))?;
        let mut e = product_entry(vec![ad_d_entry(two_n)?, ad_d_entry(two_n)?.bop()]);
        e.name = format!("Z(adD:{two_n})");
        e.base_name = Some(base_name);
        return Ok(e);
    }
    Err(FusionError::UnknownName(format!("Z({inner})")))
}

/// Names of every catalog family instance within the desk-scale bounds,
/// used by the CLI listing and the acceptance sweep.
pub fn desk_scale_names() -> Vec<String> {
    let mut names = Vec::new();
    for n in 3..=17usize {
        if n % 2 == 1 {
            names.push(format!("A:{n}"));
        } else {
            names.push(format!("A:{n},q=deg"));
            names.push(format!("A:{n},q=mod"));
        }
        names.push(format!("adA:{n}"));
    }
    for two_n in (4..=16usize).step_by(2) {
        names.push(format!("D:{two_n}"));
        names.push(format!("adD:{two_n}"));
    }
    for e in ["Z(E6)", "Z(E8)", "Z(adE6)", "Z(adE8)"] {
        names.push(e.into());
    }
    names
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_e6_is_a11_times_a3() {
        let e = catalog("Z(E6)").unwrap();
        assert_eq!(e.ring.rank(), 33);
        assert_eq!(e.factors.len(), 2);
        assert_eq!(e.factors[1].kind, BraidKind::Bop);
        assert!(e.is_braided());
    }

    #[test]
    fn z_ad_e8_factors() {
        let e = catalog("Z(adE8)").unwrap();
        // ad(D16) has 9 labels, ad(A4) has 2
        assert_eq!(e.ring.rank(), 18);
    }

    #[test]
    fn z_ad_a_small() {
        // the rank-4 toric-code ring: all dims 1
        let e = catalog("Z(adA:3)").unwrap();
        assert_eq!(e.ring.rank(), 4);
        assert!(e.ring.dims().iter().all(|d| d.is_one()));
        e.ring.verify(200, 3).unwrap();
        // N=2: six free orbits plus the split pair
        let e5 = catalog("Z(adA:5)").unwrap();
        assert_eq!(e5.ring.rank(), 8);
        // N=3: rank 14
        let e7 = catalog("Z(adA:7)").unwrap();
        assert_eq!(e7.ring.rank(), 14);
        e7.ring.verify(200, 3).unwrap();
    }

    #[test]
    fn z_ad_e6_ring() {
        let e = catalog("Z(adE6)").unwrap();
        assert_eq!(e.ring.rank(), 10);
        e.ring.verify(200, 3).unwrap();
        // dims pattern {1, 1+s3, 2+s3, 2+s3, 1+s3, 1, 1+s3, 3+s3, 1+s3, 1+s3}
        let s3 = crate::cyclo::two_cos(12, 1);
        let one = Cyc::one();
        let expect: Vec<Cyc> = vec![
            one.clone(),
            one.add(&s3),
            Cyc::from_integer(2).add(&s3),
            Cyc::from_integer(2).add(&s3),
            one.add(&s3),
            one.clone(),
            one.add(&s3),
            Cyc::from_integer(3).add(&s3),
            one.add(&s3),
            one.add(&s3),
        ];
        let mut got: Vec<Cyc> = e.ring.dims().to_vec();
        let mut want = expect;
        // compare as multisets via embedding sort
        got.sort_by(|a, b| a.embed().0.partial_cmp(&b.embed().0).unwrap());
        want.sort_by(|a, b| a.embed().0.partial_cmp(&b.embed().0).unwrap());
        assert_eq!(got, want);
    }

    #[test]
    fn bad_names_rejected() {
        assert!(catalog("E7").is_err());
        assert!(catalog("A:1").is_err());
        assert!(catalog("Z(A:4)").is_err());
        assert!(catalog("adC:9").is_err());
    }

    #[test]
    fn product_grammar() {
        let e = catalog("adD:10⊠adD:10^bop").unwrap();
        assert_eq!(e.ring.rank(), 36);
        let z = catalog("Z(adD:10)").unwrap();
        assert_eq!(z.ring.rank(), 36);
        assert_eq!(e.ring.labels(), z.ring.labels());
    }
}
