//! Sparse trigonometric-polynomial (k,k)-forms on the real torus
//! R^{2g}/Z^{2g}: finitely many Fourier modes, each attached to a wedge of
//! eigenframe covectors dw_I ∧ dw̄_J. Modes are tracked exactly (arbitrary
//! precision frequencies); only the coefficients are floating point.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::ErgodicError;

/// A single Fourier mode: a lattice frequency `l` in Z^{2g} together with
/// strictly increasing frame multi-indices (0-based). The attached basis
/// form is dw_{left} ∧ dw̄_{right} in that order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mode {
    pub l: Vec<BigInt>,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Serializable mode record for the JSON interface: 1-based coordinate
/// indices and machine-integer frequencies.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModeEntry {
    pub l: Vec<i64>,
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub re: f64,
    pub im: f64,
}

/// A finite sum of modes of pure bidegree (k,k) on a torus of complex
/// dimension g.
#[derive(Clone, Debug)]
pub struct FourierForm {
    g: usize,
    k: usize,
    coeffs: BTreeMap<Mode, Complex64>,
}

/// Sorts a multi-index, returning the strictly increasing version and the
/// permutation sign, or `None` when an index repeats (the wedge vanishes).
fn sort_multi_index(idx: &[usize]) -> Option<(Vec<usize>, f64)> {
    let mut v = idx.to_vec();
    let mut sign = 1.0;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// Merges two strictly increasing multi-indices, returning the merged index
/// and the shuffle sign, or `None` when they intersect.
fn merge_multi_index(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, f64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut sign = 1.0;
    let (mut ia, mut ib) = (0, 0);
    while ia < a.len() || ib < b.len() {
        if ib == b.len() || (ia < a.len() && a[ia] < b[ib]) {
            out.push(a[ia]);
            ia += 1;
        } else if ia < a.len() && a[ia] == b[ib] {
            return None;
        } else {
            // b[ib] jumps over the remaining entries of a.
            if (a.len() - ia) % 2 == 1 {
                sign = -sign;
            }
            out.push(b[ib]);
            ib += 1;
        }
    }
    Some((out, sign))
}

impl FourierForm {
    pub fn new(g: usize, k: usize) -> Self {
        assert!(k <= g, "bidegree exceeds the dimension");
        FourierForm {
            g,
            k,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mode_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn modes(&self) -> impl Iterator<Item = (&Mode, &Complex64)> {
        self.coeffs.iter()
    }

    /// Adds `c · e^{2πi⟨l,x⟩} dw_I ∧ dw̄_J`, normalizing the multi-indices.
    pub fn insert(
        &mut self,
        l: Vec<BigInt>,
        left: &[usize],
        right: &[usize],
        c: Complex64,
    ) -> Result<(), ErgodicError> {
        if l.len() != 2 * self.g {
            return Err(ErgodicError::InvalidMode(format!(
                "frequency vector has length {}, expected {}",
                l.len(),
                2 * self.g
            )));
        }
        if left.len() != self.k || right.len() != self.k {
            return Err(ErgodicError::InvalidMode(format!(
                "multi-indices of size {}/{} on a ({k},{k})-form",
                left.len(),
                right.len(),
                k = self.k
            )));
        }
        if left.iter().chain(right).any(|&i| i >= self.g) {
            return Err(ErgodicError::InvalidMode(
                "frame index out of range".into(),
            ));
        }
        let (li, ls) = match sort_multi_index(left) {
            Some(v) => v,
            None => return Ok(()),
        };
        let (ri, rs) = match sort_multi_index(right) {
            Some(v) => v,
            None => return Ok(()),
        };
        self.accumulate(
            Mode {
                l,
                left: li,
                right: ri,
            },
            c * (ls * rs),
        );
        Ok(())
    }

    /// A single constant mode (l = 0).
    pub fn constant(
        g: usize,
        k: usize,
        left: &[usize],
        right: &[usize],
        c: Complex64,
    ) -> Result<Self, ErgodicError> {
        let mut f = FourierForm::new(g, k);
        f.insert(vec![BigInt::zero(); 2 * g], left, right, c)?;
        Ok(f)
    }

    pub(crate) fn accumulate(&mut self, m: Mode, c: Complex64) {
        if c.norm_sqr() == 0.0 {
            return;
        }
        match self.coeffs.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().norm_sqr() == 0.0 {
                    o.remove();
                }
            }
        }
    }

    /// Coefficient of a normalized mode (zero when absent).
    pub fn coefficient(&self, l: &[BigInt], left: &[usize], right: &[usize]) -> Complex64 {
        let key = Mode {
            l: l.to_vec(),
            left: left.to_vec(),
            right: right.to_vec(),
        };
        self.coeffs
            .get(&key)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Largest coefficient magnitude.
    pub fn sup_norm(&self) -> f64 {
        self.coeffs
            .values()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// Sum of squared coefficient magnitudes.
    pub fn l2_norm_sq(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm_sqr()).sum()
    }

    pub fn scale(&mut self, f: Complex64) {
        if f.norm_sqr() == 0.0 {
            self.coeffs.clear();
            return;
        }
        for v in self.coeffs.values_mut() {
            *v *= f;
        }
    }

    pub fn scaled(&self, f: Complex64) -> Self {
        let mut out = self.clone();
        out.scale(f);
        out
    }

    /// self += factor · other (modewise).
    pub fn add_scaled(&mut self, other: &FourierForm, factor: Complex64) {
        assert_eq!(self.g, other.g, "dimension mismatch");
        assert_eq!(self.k, other.k, "bidegree mismatch");
        for (m, c) in &other.coeffs {
            self.accumulate(m.clone(), c * factor);
        }
    }

    /// Sup-norm of the modewise difference.
    pub fn sup_distance(&self, other: &FourierForm) -> f64 {
        let mut worst: f64 = 0.0;
        for (m, c) in &self.coeffs {
            let d = other
                .coeffs
                .get(m)
                .copied()
                .unwrap_or(Complex64::new(0.0, 0.0));
            worst = worst.max((c - d).norm());
        }
        for (m, c) in &other.coeffs {
            if !self.coeffs.contains_key(m) {
                worst = worst.max(c.norm());
            }
        }
        worst
    }

    /// Wedge product with exact mode bookkeeping: frequencies add, frame
    /// indices merge with the shuffle sign, and the dw̄ block of the left
    /// factor is carried across the dw block of the right one.
    pub fn wedge(&self, other: &FourierForm) -> Result<FourierForm, ErgodicError> {
        if self.g != other.g {
            return Err(ErgodicError::InvalidMode(
                "wedge of forms on different tori".into(),
            ));
        }
        if self.k + other.k > self.g {
            return Err(ErgodicError::InvalidMode(
                "wedge exceeds the top bidegree".into(),
            ));
        }
        let mut out = FourierForm::new(self.g, self.k + other.k);
        for (ma, ca) in &self.coeffs {
            for (mb, cb) in &other.coeffs {
                let left = match merge_multi_index(&ma.left, &mb.left) {
                    Some(v) => v,
                    None => continue,
                };
                let right = match merge_multi_index(&ma.right, &mb.right) {
                    Some(v) => v,
                    None => continue,
                };
                // dw̄_{J_a} (degree k_a) moves past dw_{I_b} (degree k_b).
                let cross = if (ma.right.len() * mb.left.len()) % 2 == 1 {
                    -1.0
                } else {
                    1.0
                };
                let l: Vec<BigInt> = ma
                    .l
                    .iter()
                    .zip(&mb.l)
                    .map(|(x, y)| x + y)
                    .collect();
                out.accumulate(
                    Mode {
                        l,
                        left: left.0,
                        right: right.0,
                    },
                    ca * cb * (cross * left.1 * right.1),
                );
            }
        }
        Ok(out)
    }

    /// Evaluates the coefficient function of the basis form dw_I ∧ dw̄_J at a
    /// point of the torus (coordinates in [0,1)^{2g}).
    pub fn eval_coefficient(&self, left: &[usize], right: &[usize], x: &[f64]) -> Complex64 {
        assert_eq!(x.len(), 2 * self.g, "point dimension mismatch");
        let mut total = Complex64::new(0.0, 0.0);
        for (m, c) in &self.coeffs {
            if m.left != left || m.right != right {
                continue;
            }
            let phase: f64 = m
                .l
                .iter()
                .zip(x)
                .map(|(li, xi)| li.to_f64().unwrap_or(0.0) * xi)
                .sum();
            total += c * Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * phase);
        }
        total
    }

    /// A real form satisfies c_{−l,J,I} = conj(c_{l,I,J}); returns the worst
    /// violation over all tracked modes.
    pub fn conjugate_symmetry_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (m, c) in &self.coeffs {
            let neg: Vec<BigInt> = m.l.iter().map(|x| -x).collect();
            let partner = self.coefficient(&neg, &m.right, &m.left);
            worst = worst.max((partner - c.conj()).norm());
        }
        worst
    }

    /// Builds a form from serialized mode records (1-based indices).
    pub fn from_entries(g: usize, k: usize, entries: &[ModeEntry]) -> Result<Self, ErgodicError> {
        let mut f = FourierForm::new(g, k);
        for e in entries {
            let shift = |idx: &[usize]| -> Result<Vec<usize>, ErgodicError> {
                idx.iter()
                    .map(|&i| {
                        if i == 0 || i > g {
                            Err(ErgodicError::InvalidMode(format!(
                                "coordinate index {i} outside 1..={g}"
                            )))
                        } else {
                            Ok(i - 1)
                        }
                    })
                    .collect()
            };
            f.insert(
                e.l.iter().map(|&x| BigInt::from(x)).collect(),
                &shift(&e.i)?,
                &shift(&e.j)?,
                Complex64::new(e.re, e.im),
            )?;
        }
        Ok(f)
    }

    /// Serializes the mode list (1-based indices); fails when a frequency no
    /// longer fits in a machine integer.
    pub fn to_entries(&self) -> Result<Vec<ModeEntry>, ErgodicError> {
        self.coeffs
            .iter()
            .map(|(m, c)| {
                let l = m
                    .l
                    .iter()
                    .map(|x| {
                        x.to_i64().ok_or_else(|| {
                            ErgodicError::InvalidMode(
                                "frequency exceeds the serializable range".into(),
                            )
                        })
                    })
                    .collect::<Result<Vec<i64>, _>>()?;
                Ok(ModeEntry {
                    l,
                    i: m.left.iter().map(|&i| i + 1).collect(),
                    j: m.right.iter().map(|&j| j + 1).collect(),
                    re: c.re,
                    im: c.im,
                })
            })
            .collect()
    }
}
