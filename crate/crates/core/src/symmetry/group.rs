use std::collections::HashMap;

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kpoint::{BlochVector, HighSymmetryPoint};
use crate::symmetry::element::{space_group_cosets, HalfVec, PointOp, SymmetryElement};

/// Lattice translations modulo the kernel of the Bloch phase.
///
/// With k given in units of pi/Lambda and integer parity p, the translation t
/// acts as (-1)^(p.t); translations with odd p.t are "barred".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TranslationQuotient {
    parity: [i32; 2],
}

impl TranslationQuotient {
    pub fn for_bloch(k: BlochVector) -> Self {
        TranslationQuotient { parity: k.parity() }
    }

    pub fn parity(&self) -> [i32; 2] {
        self.parity
    }

    pub fn has_bars(&self) -> bool {
        self.parity != [0, 0]
    }

    pub fn is_bar(&self, t: [i32; 2]) -> bool {
        (self.parity[0] * t[0] + self.parity[1] * t[1]).rem_euclid(2) == 1
    }

    /// Lattice vector representing the barred class.
    pub fn bar_vector(&self) -> [i32; 2] {
        if self.parity[0] == 1 {
            [1, 0]
        } else {
            [0, 1]
        }
    }

    /// Canonical representative: fractional translation plus the bar representative.
    pub fn canonical(&self, e: &SymmetryElement) -> SymmetryElement {
        let (frac, t) = e.translation.split();
        let translation = if self.is_bar(t) { frac + HalfVec::from_lattice(self.bar_vector()) } else { frac };
        SymmetryElement { translation, ..*e }
    }

    pub fn element_is_bar(&self, e: &SymmetryElement) -> bool {
        self.is_bar(e.translation.split().1)
    }
}

/// Outcome of the Dimmock-Wheeler test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CorepType {
    A,
    B,
    C,
}

impl std::fmt::Display for CorepType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CorepType::A => "a",
            CorepType::B => "b",
            CorepType::C => "c",
        };
        f.write_str(s)
    }
}

/// Little group of k in the magnetic group, with translations reduced by the Bloch quotient.
///
/// Unitary elements come first. When barred classes exist, each point operation
/// appears as the pair (g, g-bar) in the order E, C4, C4i, C2, mx, my, sd, sdp;
/// otherwise the plain C4v order is used. Antiunitary elements follow in the same
/// order and at time-reversal-invariant k equal xi times the unitary list.
#[derive(Debug, Clone, Serialize)]
pub struct LittleGroup {
    k: BlochVector,
    point: Option<HighSymmetryPoint>,
    quotient: TranslationQuotient,
    elements: Vec<SymmetryElement>,
    unitary_count: usize,
    #[serde(skip)]
    table: Vec<Vec<usize>>,
    #[serde(skip)]
    lookup: HashMap<SymmetryElement, usize>,
}

const BARRED_ORDER: [PointOp; 8] =
    [PointOp::E, PointOp::C4, PointOp::C4Inv, PointOp::C2, PointOp::Sx, PointOp::Sy, PointOp::Sd, PointOp::Sdp];

fn maps_k_to(e: &SymmetryElement, k: BlochVector, target: BlochVector) -> bool {
    let m = e.point.matrix();
    let rk = BlochVector::new(
        m[0][0] as f64 * k.x() + m[0][1] as f64 * k.y(),
        m[1][0] as f64 * k.x() + m[1][1] as f64 * k.y(),
    );
    rk.equivalent(&target)
}

impl LittleGroup {
    pub fn new(k: BlochVector) -> Result<Self> {
        let quotient = TranslationQuotient::for_bloch(k);
        let order: &[PointOp] = if quotient.has_bars() { &BARRED_ORDER } else { &PointOp::ALL };
        let cosets = space_group_cosets();
        let rep = |p: PointOp, anti: bool| *cosets.iter().find(|e| e.point == p && e.antiunitary == anti).unwrap();
        let mut elements = Vec::new();
        for anti in [false, true] {
            let target = if anti { k.neg() } else { k };
            for &p in order {
                let e = rep(p, anti);
                if !maps_k_to(&e, k, target) {
                    continue;
                }
                elements.push(quotient.canonical(&e));
                if quotient.has_bars() {
                    let bar = SymmetryElement {
                        translation: e.translation + HalfVec::from_lattice(quotient.bar_vector()),
                        ..e
                    };
                    elements.push(quotient.canonical(&bar));
                }
            }
        }
        let unitary_count = elements.iter().filter(|e| !e.antiunitary).count();
        let lookup: HashMap<SymmetryElement, usize> = elements.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let mut table = vec![vec![0; elements.len()]; elements.len()];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let c = quotient.canonical(&a.compose(b));
                table[i][j] = *lookup.get(&c).ok_or_else(|| Error::NotClosed(format!("{a} * {b} = {c}")))?;
            }
        }
        Ok(LittleGroup { k, point: k.high_symmetry_point(), quotient, elements, unitary_count, table, lookup })
    }

    pub fn at(point: HighSymmetryPoint) -> Self {
        Self::new(point.bloch()).expect("high-symmetry little groups are closed")
    }

    pub fn k(&self) -> BlochVector {
        self.k
    }

    pub fn point(&self) -> Option<HighSymmetryPoint> {
        self.point
    }

    pub fn quotient(&self) -> TranslationQuotient {
        self.quotient
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SymmetryElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> SymmetryElement {
        self.elements[i]
    }

    pub fn unitary_count(&self) -> usize {
        self.unitary_count
    }

    pub fn unitary(&self) -> &[SymmetryElement] {
        &self.elements[..self.unitary_count]
    }

    pub fn antiunitary(&self) -> &[SymmetryElement] {
        &self.elements[self.unitary_count..]
    }

    pub fn has_antiunitary(&self) -> bool {
        self.unitary_count < self.elements.len()
    }

    pub fn index_of(&self, e: &SymmetryElement) -> Option<usize> {
        self.lookup.get(&self.quotient.canonical(e)).copied()
    }

    /// Index of `self[i] * self[j]`.
    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        (0..self.order()).find(|&j| self.table[i][j] == 0).unwrap()
    }

    pub fn is_bar(&self, i: usize) -> bool {
        self.quotient.element_is_bar(&self.elements[i])
    }

    /// Multiplication table of the unitary subgroup.
    pub fn unitary_table(&self) -> Vec<Vec<usize>> {
        let n = self.unitary_count;
        (0..n).map(|i| self.table[i][..n].to_vec()).collect()
    }

    pub fn label(&self, i: usize) -> String {
        let e = &self.elements[i];
        let base = if e.antiunitary { e.point.antiunitary_name() } else { e.point.name() };
        if self.is_bar(i) {
            format!("{base}bar")
        } else {
            base.to_string()
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.order()).map(|i| self.label(i)).collect()
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        (0..self.order()).find(|&i| self.label(i) == label)
    }

    /// Indices of B^2 for every antiunitary B, in antiunitary order.
    pub fn squared_antiunitary(&self) -> Vec<usize> {
        (self.unitary_count..self.order()).map(|i| self.table[i][i]).collect()
    }

    /// Sum over antiunitary B of chi(B^2), for characters indexed by unitary element.
    pub fn dimmock_wheeler_sum(&self, characters: &[C64]) -> C64 {
        assert_eq!(characters.len(), self.unitary_count);
        self.squared_antiunitary().into_iter().map(|u| characters[u]).sum()
    }

    /// Classifies a character row; fails when the sum is not n, -n or 0.
    pub fn dimmock_wheeler(&self, characters: &[C64]) -> Result<CorepType> {
        let s = self.dimmock_wheeler_sum(characters);
        let n = self.unitary_count as f64;
        let tol = 1e-9 * n;
        if s.im.abs() > tol {
            return Err(Error::Corep(format!("complex Dimmock-Wheeler sum {s}")));
        }
        if (s.re - n).abs() <= tol {
            Ok(CorepType::A)
        } else if (s.re + n).abs() <= tol {
            Ok(CorepType::B)
        } else if s.re.abs() <= tol {
            Ok(CorepType::C)
        } else {
            Err(Error::Corep(format!("Dimmock-Wheeler sum {} is not 0 or +-{n}", s.re)))
        }
    }

    /// The antiunitary coset representative xi = T{E|1/2,1/2}, if present.
    pub fn xi_index(&self) -> Option<usize> {
        self.index_of(&SymmetryElement::xi())
    }

    /// Index of S^-1 g S for the half shift S = {E|1/2,1/2} (unitary g only).
    pub fn shift_conjugate(&self, i: usize) -> usize {
        let s = SymmetryElement::half_shift();
        let c = s.inverse().compose(&self.elements[i]).compose(&s);
        self.index_of(&c).expect("conjugation by the half shift preserves the little group")
    }
}
