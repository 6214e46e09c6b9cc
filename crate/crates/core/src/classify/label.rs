use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::classify::action::SymmetryAction;
use crate::classify::cluster::{degeneracy_clusters, detect_pt_pairs, pair_ids, CLUSTER_TOL, PAIR_TOL};
use crate::classify::subspace::{leakage, orthonormalize, representation};
use crate::corep::{corep_catalog, Corepresentation};
use crate::error::Result;
use crate::kpoint::BlochVector;
use crate::pwe::{BlochMode, KSolution};
use crate::symmetry::LittleGroup;

/// Default largest character mismatch accepted for a label.
pub const MATCH_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyOptions {
    pub cluster_tol: f64,
    pub pair_tol: f64,
    pub match_tol: f64,
    /// Only modes with Re(omega) in [lo, hi] are reported.
    pub window: Option<(f64, f64)>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { cluster_tol: CLUSTER_TOL, pair_tol: PAIR_TOL, match_tol: MATCH_TOL, window: None }
    }
}

impl ClassifyOptions {
    pub fn window(lo: f64, hi: f64) -> Self {
        ClassifyOptions { window: Some((lo, hi)), ..Default::default() }
    }
}

/// Catalog coreps grouped by their unitary characters. Members of one family are
/// indistinguishable by measurement (e.g. Γ1+ and Γ1-, or the equivalent X Γ5 and Γ7).
#[derive(Debug, Clone)]
pub struct CorepFamily {
    pub label: String,
    pub members: Vec<String>,
    pub dim: usize,
    pub characters: Vec<C64>,
}

/// Strips ± and ^... decorations from a catalog name.
pub fn family_name(name: &str) -> String {
    let base = name.split('^').next().unwrap_or(name);
    base.trim_end_matches(['+', '-']).to_string()
}

pub fn corep_families(group: &LittleGroup, catalog: &[Corepresentation]) -> Vec<CorepFamily> {
    let mut out: Vec<CorepFamily> = Vec::new();
    for c in catalog {
        let chi = c.unitary_characters(group);
        let same = out
            .iter_mut()
            .find(|f| f.dim == c.dim() && f.characters.iter().zip(&chi).all(|(a, b)| (a - b).norm() < 1e-9));
        match same {
            Some(f) => f.members.push(c.name.clone()),
            None => out.push(CorepFamily {
                label: family_name(&c.name),
                members: vec![c.name.clone()],
                dim: c.dim(),
                characters: chi,
            }),
        }
    }
    out
}

/// Result of matching measured unitary characters against the catalog.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModeLabel {
    /// Family label, or a direct sum such as "Γ5 ⊕ Γ5"; `None` when nothing fits.
    pub label: Option<String>,
    /// Catalog entries consistent with the measurement.
    pub equivalents: Vec<String>,
    /// Largest |measured - catalog| character deviation.
    pub confidence: f64,
}

fn dot(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Decomposes a measured unitary character into catalog families.
pub fn match_characters(chi: &[C64], dim: usize, families: &[CorepFamily], tol: f64) -> ModeLabel {
    let mut parts: Vec<(usize, usize)> = Vec::new();
    let mut fitted = vec![C64::new(0.0, 0.0); chi.len()];
    for (i, f) in families.iter().enumerate() {
        let m = (dot(&f.characters, chi) / dot(&f.characters, &f.characters)).re.round();
        if m >= 1.0 {
            parts.push((i, m as usize));
            for (x, y) in fitted.iter_mut().zip(&f.characters) {
                *x += m * y;
            }
        }
    }
    let confidence = chi.iter().zip(&fitted).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    let total: usize = parts.iter().map(|&(i, m)| m * families[i].dim).sum();
    if parts.is_empty() || total != dim || confidence > tol {
        return ModeLabel { label: None, equivalents: Vec::new(), confidence };
    }
    let label = parts
        .iter()
        .flat_map(|&(i, m)| std::iter::repeat_n(families[i].label.clone(), m))
        .collect::<Vec<_>>()
        .join(" ⊕ ");
    let equivalents = parts.iter().flat_map(|&(i, _)| families[i].members.clone()).collect();
    ModeLabel { label: Some(label), equivalents, confidence }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    /// A real-frequency degeneracy cluster.
    Real,
    /// A gain cluster together with its conjugate loss cluster.
    PtPair,
}

/// A symmetry-invariant set of modes: one real cluster or a gain/loss cluster pair.
#[derive(Debug, Clone, Serialize)]
pub struct SymmetryBlock {
    pub kind: BlockKind,
    /// Mode indices into the solution (gain members first for pairs).
    pub modes: Vec<usize>,
    pub omega: [f64; 2],
    #[serde(skip)]
    pub characters: Vec<C64>,
    pub label: ModeLabel,
    /// Largest norm of an antiunitary image leaving the expected subspace
    /// (the block itself for real clusters, the loss cluster for pairs).
    pub antiunitary_leakage: f64,
}

impl SymmetryBlock {
    pub fn dim(&self) -> usize {
        self.modes.len()
    }

    /// Two gain and two loss modes sharing one conjugate pair of frequencies.
    pub fn is_quartet(&self) -> bool {
        self.kind == BlockKind::PtPair && self.modes.len() == 4
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifiedMode {
    pub k: [f64; 2],
    pub band: usize,
    pub omega_re: f64,
    pub omega_im: f64,
    pub cluster_id: usize,
    pub pair_id: Option<usize>,
    pub label: Option<String>,
    pub confidence: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub k: [f64; 2],
    pub point: Option<String>,
    pub modes: Vec<ClassifiedMode>,
    pub blocks: Vec<SymmetryBlock>,
}

impl Classification {
    pub fn pair_count(&self) -> usize {
        self.modes.iter().filter(|m| m.pair_id.is_some()).count() / 2
    }

    /// Sizes of the real-frequency clusters, in mode order.
    pub fn real_cluster_sizes(&self) -> Vec<usize> {
        self.blocks.iter().filter(|b| b.kind == BlockKind::Real).map(|b| b.dim()).collect()
    }

    pub fn quartets(&self) -> impl Iterator<Item = &SymmetryBlock> {
        self.blocks.iter().filter(|b| b.is_quartet())
    }
}

fn subspace(modes: &[&BlochMode]) -> Vec<Vec<C64>> {
    orthonormalize(&modes.iter().map(|m| m.coefficients.clone()).collect::<Vec<_>>())
}

fn unitary_characters(actions: &[SymmetryAction], q: &[Vec<C64>]) -> Vec<C64> {
    actions.iter().map(|a| representation(a, q).trace()).collect()
}

/// Labels one set of modes at a high-symmetry point by unitary characters.
///
/// The modes should span an invariant subspace: a real cluster, or a gain cluster
/// together with its loss partners.
pub fn classify_cluster(
    modes: &[&BlochMode],
    group: &LittleGroup,
    catalog: &[Corepresentation],
    match_tol: f64,
) -> Result<ModeLabel> {
    let basis = &modes[0].basis;
    let actions = group.unitary().iter().map(|e| SymmetryAction::new(e, basis)).collect::<Result<Vec<_>>>()?;
    let q = subspace(modes);
    let chi = unitary_characters(&actions, &q);
    Ok(match_characters(&chi, q.len(), &corep_families(group, catalog), match_tol))
}

fn side(w: C64, tol: f64) -> i8 {
    if w.im > tol {
        1
    } else if w.im < -tol {
        -1
    } else {
        0
    }
}

/// Clusters, pairs and (at high-symmetry points) labels every mode of a solution.
pub fn classify_solution(sol: &KSolution, opts: &ClassifyOptions) -> Result<Classification> {
    let omegas = sol.omegas();
    let clusters = degeneracy_clusters(&omegas, opts.cluster_tol, opts.pair_tol);
    let partner = detect_pt_pairs(&omegas, opts.pair_tol)?;
    let pair_id = pair_ids(&partner);
    let mut cluster_of = vec![0; omegas.len()];
    for (c, members) in clusters.iter().enumerate() {
        for &i in members {
            cluster_of[i] = c;
        }
    }

    let point = sol.k.high_symmetry_point();
    let context = match point {
        Some(p) => {
            let group = LittleGroup::at(p);
            let catalog = corep_catalog(&group, true)?;
            let families = corep_families(&group, &catalog);
            let unitary =
                group.unitary().iter().map(|e| SymmetryAction::new(e, &sol.basis)).collect::<Result<Vec<_>>>()?;
            let anti =
                group.antiunitary().iter().map(|e| SymmetryAction::new(e, &sol.basis)).collect::<Result<Vec<_>>>()?;
            Some((families, unitary, anti))
        }
        None => None,
    };

    let in_window = |i: usize| opts.window.is_none_or(|(lo, hi)| omegas[i].re >= lo && omegas[i].re <= hi);

    let mut blocks = Vec::new();
    for members in &clusters {
        let lead = omegas[members[0]];
        let s = side(lead, opts.pair_tol);
        if s < 0 || !members.iter().any(|&i| in_window(i)) {
            continue;
        }
        let (kind, all, source, target) = if s == 0 {
            (BlockKind::Real, members.clone(), members.clone(), members.clone())
        } else {
            let mut loss: Vec<usize> = Vec::new();
            for &i in members {
                for &j in &clusters[cluster_of[partner[i].expect("paired")]] {
                    if !loss.contains(&j) {
                        loss.push(j);
                    }
                }
            }
            loss.sort_unstable();
            let all = members.iter().chain(&loss).copied().collect();
            (BlockKind::PtPair, all, members.clone(), loss)
        };
        let (characters, label, antiunitary_leakage) = match &context {
            Some((families, unitary, anti)) => {
                let pick = |ix: &[usize]| subspace(&ix.iter().map(|&i| &sol.modes[i]).collect::<Vec<_>>());
                let q = pick(&all);
                let chi = unitary_characters(unitary, &q);
                let label = match_characters(&chi, q.len(), families, opts.match_tol);
                let (qs, qt) = (pick(&source), pick(&target));
                let leak = anti.iter().map(|a| leakage(a, &qs, &qt)).fold(0.0, f64::max);
                (chi, label, leak)
            }
            None => (Vec::new(), ModeLabel { label: None, equivalents: Vec::new(), confidence: f64::NAN }, f64::NAN),
        };
        blocks.push(SymmetryBlock {
            kind,
            modes: all,
            omega: [lead.re, lead.im],
            characters,
            label,
            antiunitary_leakage,
        });
    }

    let mut block_of = vec![None; omegas.len()];
    for (b, block) in blocks.iter().enumerate() {
        for &i in &block.modes {
            block_of[i] = Some(b);
        }
    }
    let modes = (0..omegas.len())
        .filter(|&i| in_window(i))
        .map(|i| {
            let block = block_of[i].map(|b| &blocks[b]);
            ClassifiedMode {
                k: sol.k.0,
                band: i,
                omega_re: omegas[i].re,
                omega_im: omegas[i].im,
                cluster_id: cluster_of[i],
                pair_id: pair_id[i],
                label: block.and_then(|b| b.label.label.clone()),
                confidence: block.map(|b| b.label.confidence).filter(|c| c.is_finite()),
            }
        })
        .collect();
    Ok(Classification { k: sol.k.0, point: point.map(|p| p.name().to_string()), modes, blocks })
}

/// Frequencies at `k` labelled with default options; convenience for reports.
pub fn classify_at(
    config: &crate::lattice::LatticeConfig,
    k: BlochVector,
    bands: usize,
    opts: &ClassifyOptions,
) -> Result<Classification> {
    let sol = crate::pwe::solve(config, k, &crate::pwe::SolveOptions::bands(bands))?;
    classify_solution(&sol, opts)
}
