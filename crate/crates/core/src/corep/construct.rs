use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::corep::matrix::CMat;
use crate::corep::tables::{CharacterTable, Irrep};
use crate::error::{Error, Result};
use crate::kpoint::HighSymmetryPoint;
use crate::symmetry::{CorepType, LittleGroup};

/// Tolerance for exact group-theoretic identities.
pub const EXACT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Decoration {
    /// Similarity by diag(1, -1).
    U,
    /// Similarity by diag(c, -i c*).
    U1(#[serde(serialize_with = "ser_c64")] C64),
    /// Similarity by diag(c, i c*).
    U2(#[serde(serialize_with = "ser_c64")] C64),
    /// Antiunitary matrices multiplied by beta.
    Beta(CMat),
}

fn ser_c64<S: serde::Serializer>(v: &C64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [v.re, v.im].serialize(s)
}

impl Decoration {
    pub fn symbol(&self) -> &'static str {
        match self {
            Decoration::U => "u",
            Decoration::U1(_) => "u1",
            Decoration::U2(_) => "u2",
            Decoration::Beta(_) => "β",
        }
    }

    /// The similarity matrix for u-type decorations.
    pub fn matrix(&self) -> Option<CMat> {
        let one = C64::new(1.0, 0.0);
        let i = C64::new(0.0, 1.0);
        match self {
            Decoration::U => Some(CMat::diag(&[one, -one])),
            Decoration::U1(c) => Some(CMat::diag(&[*c, -i * c.conj()])),
            Decoration::U2(c) => Some(CMat::diag(&[*c, i * c.conj()])),
            Decoration::Beta(_) => None,
        }
    }
}

/// A corepresentation of a little group: one matrix per element, unitary elements first.
#[derive(Debug, Clone, Serialize)]
pub struct Corepresentation {
    pub name: String,
    pub point: Option<HighSymmetryPoint>,
    pub kind: CorepType,
    pub source: Vec<String>,
    pub beta: Option<CMat>,
    pub decorations: Vec<Decoration>,
    pub element_labels: Vec<String>,
    pub matrices: Vec<CMat>,
}

impl Corepresentation {
    pub fn dim(&self) -> usize {
        self.matrices[0].dim()
    }

    pub fn matrix(&self, element: usize) -> &CMat {
        &self.matrices[element]
    }

    pub fn matrix_by_label(&self, label: &str) -> Option<&CMat> {
        self.element_labels.iter().position(|l| l == label).map(|i| &self.matrices[i])
    }

    pub fn characters(&self) -> Vec<C64> {
        self.matrices.iter().map(CMat::trace).collect()
    }

    pub fn unitary_characters(&self, group: &LittleGroup) -> Vec<C64> {
        self.matrices[..group.unitary_count()].iter().map(CMat::trace).collect()
    }

    /// Display label including decoration superscripts.
    pub fn label(&self) -> String {
        if self.decorations.is_empty() {
            return self.name.clone();
        }
        let sup: Vec<&str> = self.decorations.iter().map(Decoration::symbol).collect();
        format!("{}^{{{}}}", self.name, sup.join(","))
    }
}

/// Largest violation of the corepresentation multiplication rule
/// D(a) D(b) = D(ab) for unitary a and D(a) D(b)* = D(ab) for antiunitary a.
pub fn multiplication_defect(group: &LittleGroup, matrices: &[CMat]) -> f64 {
    let n = group.order();
    let mut worst = 0.0f64;
    for a in 0..n {
        let anti = group.element(a).antiunitary;
        for b in 0..n {
            let rhs = if anti { matrices[b].conj() } else { matrices[b].clone() };
            let lhs = &matrices[a] * &rhs;
            worst = worst.max(lhs.max_abs_diff(&matrices[group.product(a, b)]));
        }
    }
    worst
}

/// Corep number used in band labels, e.g. 5 for E at Gamma or for A_u at X.
pub fn corep_number(point: HighSymmetryPoint, irrep: &str) -> Option<usize> {
    let list: &[&str] = match point {
        HighSymmetryPoint::Gamma => &["A1", "A2", "B1", "B2", "E"],
        HighSymmetryPoint::X => &["Ag", "B1g", "B2g", "B3g", "Au", "B1u", "B2u", "B3u"],
        HighSymmetryPoint::M => &["A1u", "A2u", "B1u", "B2u", "Eu"],
    };
    list.iter().position(|&n| n == irrep).map(|i| i + 1)
}

/// The beta used for the superscript β in band labels.
pub fn reference_beta(point: HighSymmetryPoint, dim: usize) -> CMat {
    let one = C64::new(1.0, 0.0);
    match (point, dim) {
        (_, 1) => CMat::scalar(-one),
        (HighSymmetryPoint::M, 2) => CMat::diag(&[-one, one]),
        (_, d) => CMat::identity(d).neg(),
    }
}

fn check_element(group: &LittleGroup, a: usize) -> Result<()> {
    if a >= group.order() || !group.element(a).antiunitary {
        return Err(Error::Corep("A must be an antiunitary element of the group".into()));
    }
    Ok(())
}

/// Type (a) matrices D(R) for unitary R and D(B) = Delta(B A^-1) beta for antiunitary B,
/// without checking that they form a corepresentation.
pub fn type_a_matrices(group: &LittleGroup, irrep: &Irrep, a: usize, beta: &CMat) -> Vec<CMat> {
    let ainv = group.inverse(a);
    (0..group.order())
        .map(|b| {
            if b < group.unitary_count() {
                irrep.matrices[b].clone()
            } else {
                &irrep.matrices[group.product(b, ainv)] * beta
            }
        })
        .collect()
}

/// Builds a Type (a) corepresentation, rejecting a beta that fails beta beta* = Delta(A^2)
/// or does not intertwine Delta with its conjugate under A.
pub fn build_type_a(group: &LittleGroup, irrep: &Irrep, a: usize, beta: &CMat) -> Result<Corepresentation> {
    check_element(group, a)?;
    if beta.dim() != irrep.dim {
        return Err(Error::Corep("beta has the wrong dimension".into()));
    }
    let a2 = group.product(a, a);
    let bb = beta * &beta.conj();
    if !bb.approx_eq(&irrep.matrices[a2], EXACT_TOL) {
        return Err(Error::Corep(format!("beta beta* = {bb} differs from Delta(A^2)")));
    }
    let matrices = type_a_matrices(group, irrep, a, beta);
    let defect = multiplication_defect(group, &matrices);
    if defect > EXACT_TOL {
        return Err(Error::Corep(format!(
            "beta = {beta} does not satisfy beta Delta(R)* = Delta(A R A^-1) beta (defect {defect})"
        )));
    }
    let point = group.point();
    let number = point.and_then(|p| corep_number(p, irrep.name));
    let base = number.map_or_else(|| irrep.name.to_string(), |n| format!("Γ{n}"));
    let name = if irrep.dim == 1 {
        let sign = if beta[(0, 0)].re > 0.0 { "+" } else { "-" };
        format!("{base}{sign}")
    } else if beta.approx_eq(&CMat::identity(irrep.dim), EXACT_TOL) {
        base
    } else if let Some(p) = point {
        let r = reference_beta(p, irrep.dim);
        if beta.approx_eq(&r, EXACT_TOL) {
            format!("{base}^β")
        } else if beta.approx_eq(&r.neg(), EXACT_TOL) {
            format!("{base}^-β")
        } else {
            format!("{base}[β={beta}]")
        }
    } else {
        format!("{base}[β={beta}]")
    };
    Ok(Corepresentation {
        name,
        point,
        kind: CorepType::A,
        source: vec![irrep.name.to_string()],
        beta: Some(beta.clone()),
        decorations: Vec::new(),
        element_labels: group.labels(),
        matrices,
    })
}

/// Builds the doubled Type (c) corepresentation with A = xi = {E|1/2,1/2} T:
/// D(R) = diag(Delta(R), Delta*(A^-1 R A)), D(B) = [[0, Delta(B A)], [Delta*(A^-1 B), 0]].
pub fn build_type_c(group: &LittleGroup, irrep: &Irrep) -> Result<Corepresentation> {
    let a = group.xi_index().ok_or_else(|| Error::Corep("xi is not in the little group".into()))?;
    let ainv = group.inverse(a);
    let matrices: Vec<CMat> = (0..group.order())
        .map(|r| {
            if r < group.unitary_count() {
                let conj = group.product(group.product(ainv, r), a);
                CMat::block_diag(&irrep.matrices[r], &irrep.matrices[conj].conj())
            } else {
                let ba = group.product(r, a);
                let ab = group.product(ainv, r);
                CMat::block_antidiag(&irrep.matrices[ba], &irrep.matrices[ab].conj())
            }
        })
        .collect();
    let defect = multiplication_defect(group, &matrices);
    if defect > EXACT_TOL {
        return Err(Error::Corep(format!("Type (c) construction violates the multiplication rule ({defect})")));
    }
    let point = group.point();
    let name =
        point.and_then(|p| corep_number(p, irrep.name)).map_or_else(|| irrep.name.to_string(), |n| format!("Γ{n}"));
    Ok(Corepresentation {
        name,
        point,
        kind: CorepType::C,
        source: vec![irrep.name.to_string(), format!("{}*", irrep.name)],
        beta: None,
        decorations: Vec::new(),
        element_labels: group.labels(),
        matrices,
    })
}

fn beta_candidates(dim: usize) -> Vec<CMat> {
    let one = C64::new(1.0, 0.0);
    match dim {
        1 => vec![CMat::scalar(one), CMat::scalar(-one)],
        _ => {
            let mut out = Vec::new();
            for mask in 0..(1usize << dim) {
                let d: Vec<C64> = (0..dim).map(|i| if mask >> i & 1 == 1 { -one } else { one }).collect();
                out.push(CMat::diag(&d));
            }
            out
        }
    }
}

/// Every corepresentation derived from the irreps at a high-symmetry point.
/// With `physical_only`, irreps that do not change sign under the bar are skipped.
pub fn corep_catalog(group: &LittleGroup, physical_only: bool) -> Result<Vec<Corepresentation>> {
    let table = CharacterTable::for_group(group)?;
    let xi = group.xi_index().ok_or_else(|| Error::Corep("xi is not in the little group".into()))?;
    let mut out = Vec::new();
    for irrep in &table.irreps {
        if physical_only && !irrep.physical {
            continue;
        }
        let chars = irrep.characters();
        match group.dimmock_wheeler(&chars)? {
            CorepType::A => {
                for beta in beta_candidates(irrep.dim) {
                    if let Ok(c) = build_type_a(group, irrep, xi, &beta) {
                        out.push(c);
                    }
                }
            }
            CorepType::C => out.push(build_type_c(group, irrep)?),
            CorepType::B => {
                return Err(Error::Corep(format!("Type (b) is not expected for {}", irrep.name)));
            }
        }
    }
    Ok(out)
}

/// Applies a label decoration. Similarity decorations act as U D U^-1 on unitary
/// elements and U D (U*)^-1 on antiunitary ones; beta right-multiplies antiunitary matrices.
pub fn apply_label_decoration(
    group: &LittleGroup,
    corep: &Corepresentation,
    decoration: Decoration,
) -> Result<Corepresentation> {
    let nu = group.unitary_count();
    let mut out = corep.clone();
    match &decoration {
        Decoration::Beta(beta) => {
            if beta.dim() != corep.dim() {
                return Err(Error::Corep("beta has the wrong dimension".into()));
            }
            for m in out.matrices[nu..].iter_mut() {
                *m = &*m * beta;
            }
        }
        d => {
            let u = d.matrix().unwrap();
            if u.dim() != corep.dim() || !u.is_unitary(EXACT_TOL) {
                return Err(Error::Corep(format!(
                    "decoration {} needs a unitary {}x{} matrix",
                    d.symbol(),
                    corep.dim(),
                    corep.dim()
                )));
            }
            let uinv = u.adjoint();
            let uconj_inv = u.conj().adjoint();
            for (i, m) in out.matrices.iter_mut().enumerate() {
                let right = if i < nu { &uinv } else { &uconj_inv };
                *m = &(&u * &*m) * right;
            }
        }
    }
    out.decorations.push(decoration);
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct Equivalence {
    pub u: CMat,
    pub defect: f64,
}

/// Largest mismatch of U G1 U^-1 = G2 (unitary) and U G1 (U*)^-1 = G2 (antiunitary).
pub fn equivalence_defect(group: &LittleGroup, g1: &Corepresentation, g2: &Corepresentation, u: &CMat) -> f64 {
    let nu = group.unitary_count();
    let uinv = u.adjoint();
    let uconj_inv = u.conj().adjoint();
    let mut worst = 0.0f64;
    for i in 0..group.order() {
        let right = if i < nu { &uinv } else { &uconj_inv };
        let t = &(u * &g1.matrices[i]) * right;
        worst = worst.max(t.max_abs_diff(&g2.matrices[i]));
    }
    worst
}

/// Decides whether two corepresentations are equivalent. A supplied witness is checked
/// directly; otherwise diagonal and antidiagonal phase matrices on a pi/4 grid are searched.
pub fn corep_equivalent(
    group: &LittleGroup,
    g1: &Corepresentation,
    g2: &Corepresentation,
    witness: Option<&CMat>,
) -> Result<Option<Equivalence>> {
    if g1.dim() != g2.dim() {
        return Ok(None);
    }
    if let Some(u) = witness {
        if u.dim() != g1.dim() || !u.is_unitary(1e-10) {
            return Err(Error::Corep("witness must be a unitary matrix of matching size".into()));
        }
        let defect = equivalence_defect(group, g1, g2, u);
        return Ok((defect <= 1e-10).then(|| Equivalence { u: u.clone(), defect }));
    }
    let c1 = g1.unitary_characters(group);
    let c2 = g2.unitary_characters(group);
    if c1.iter().zip(&c2).any(|(a, b)| (a - b).norm() > 1e-10) {
        return Ok(None);
    }
    let d = g1.dim();
    let phases: Vec<C64> = (0..8).map(|k| C64::from_polar(1.0, k as f64 * std::f64::consts::FRAC_PI_4)).collect();
    let candidates: Vec<CMat> = match d {
        1 => phases.iter().map(|&p| CMat::scalar(p)).collect(),
        2 => {
            let mut v = Vec::new();
            for &p in &phases {
                for &q in &phases {
                    v.push(CMat::diag(&[p, q]));
                    let mut m = CMat::zeros(2);
                    m[(0, 1)] = p;
                    m[(1, 0)] = q;
                    v.push(m);
                }
            }
            v
        }
        _ => return Err(Error::Corep(format!("equivalence search not implemented for dimension {d}"))),
    };
    for u in candidates {
        let defect = equivalence_defect(group, g1, g2, &u);
        if defect <= 1e-10 {
            return Ok(Some(Equivalence { u, defect }));
        }
    }
    Ok(None)
}
