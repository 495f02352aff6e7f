//! Integer automorphisms of complex tori (C/Z[i])^g built from companion
//! matrices, pullback of sparse Fourier forms, Cesàro averages against the
//! predicted constant limit, and exact lattice-orbit escape checks.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use adt_core::dynamics::Spectrum;
use adt_core::salem::{classify_root_moduli, ModuliPattern};
use adt_core::IntPolynomial;

use crate::forms::{FourierForm, Mode};
use crate::ErgodicError;

/// Default cap on the number of tracked modes in a running average.
pub const DEFAULT_MODE_BUDGET: usize = 200_000;

/// Lattice norm threshold for the escape verdict.
const ESCAPE_THRESHOLD: u64 = 1_000_000;

/// An automorphism of the torus (C/Z[i])^g whose analytic representation is
/// the companion matrix of a monic integer polynomial with unit constant
/// term. Forms are expressed in the frame that diagonalizes the analytic
/// action; the lattice modes live on R^{2g}/Z^{2g}.
#[derive(Clone, Debug)]
pub struct TorusAutomorphism {
    g: usize,
    charpoly: IntPolynomial,
    /// 2g × 2g integer matrix of the induced lattice action.
    matrix: Vec<Vec<BigInt>>,
    /// Analytic eigenvalues sorted by decreasing modulus.
    rho: Vec<Complex64>,
    /// Exact moduli pattern of the analytic eigenvalues.
    pattern: ModuliPattern,
    /// Dynamical degrees λ_0..λ_g of the induced action.
    lambdas: Vec<f64>,
    /// Certified bound on ‖A·v − ρv‖ for each eigenpair of the frame.
    residual: f64,
}

/// Exact integer orbit of a dual-lattice vector under the transported
/// action, with the unbounded-escape verdict.
#[derive(Clone, Debug)]
pub struct EscapeReport {
    /// Sup-norms ‖Aⁿ·l‖ for n = 0, 1, …, up to escape or the step cap.
    pub norms: Vec<BigInt>,
    pub diverges: bool,
}

/// Checkpointed distance of the running Cesàro average to the predicted
/// limit. When the averaging hypothesis fails there is no predicted limit;
/// the sup-errors then measure the plain size of the average and
/// `limit_from_hypothesis` is false.
#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    pub checkpoints: Vec<usize>,
    /// Sup-norm over tracked coefficients of (average − predicted limit).
    pub sup_errors: Vec<f64>,
    /// Tracked modes in the running sum at each checkpoint.
    pub mode_counts: Vec<usize>,
    /// Alignment defect of the latest normalized pullback iterate against
    /// the top eigenform dw_{1..k} ∧ dw̄_{1..k}: the l²-fraction of its mass
    /// off that line (0 = perfectly collinear).
    pub collinearity: Vec<f64>,
    pub limit: FourierForm,
    pub limit_from_hypothesis: bool,
    /// Normalization λ_k used for the averages.
    pub lambda_k: f64,
}

/// State of a Cesàro run that hit the mode budget: the partial average and
/// report, plus the step reached.
#[derive(Clone, Debug)]
pub struct PartialRun {
    pub average: FourierForm,
    pub report: ConvergenceReport,
    pub steps: usize,
}

/// |P(re + i·im)|² in exact rational arithmetic.
fn eval_abs_sq(p: &IntPolynomial, re: &BigRational, im: &BigRational) -> BigRational {
    let mut r = BigRational::zero();
    let mut s = BigRational::zero();
    for c in p.coeffs().iter().rev() {
        let nr = &r * re - &s * im + BigRational::from(c.clone());
        let ns = r * im + s * re;
        r = nr;
        s = ns;
    }
    &r * &r + &s * &s
}

impl TorusAutomorphism {
    /// Builds the automorphism of (C/Z[i])^g whose analytic representation
    /// is the companion matrix of `p` (monic, integer, unit constant term,
    /// squarefree). The eigenframe is certified: each Vandermonde eigenpair
    /// (v = (1, ρ, …, ρ^{g−1})) has residual ‖A·v − ρv‖ = |P(ρ̂)| ≤ 10⁻²⁰,
    /// checked in exact rational arithmetic.
    pub fn from_reciprocal_polynomial(p: &IntPolynomial) -> Result<Self, ErgodicError> {
        let g = p.deg();
        if g == 0 {
            return Err(ErgodicError::NotAnAutomorphism(
                "constant polynomial".into(),
            ));
        }
        if p.leading() != BigInt::one() {
            return Err(ErgodicError::NotAnAutomorphism("not monic".into()));
        }
        if p.coeff(0).abs() != BigInt::one() {
            return Err(ErgodicError::NotAnAutomorphism(
                "constant term is not a unit, so the lattice map is not invertible".into(),
            ));
        }
        if !p.is_squarefree() {
            return Err(ErgodicError::RepeatedEigenvalues);
        }

        // Residual target 10⁻²⁰ per eigenpair: the companion matrix sends
        // the Vandermonde vector of an approximate root ρ̂ to within
        // |P(ρ̂)| of ρ̂ times itself, so certify |P(ρ̂)|² ≤ 10⁻⁴⁰ exactly.
        let target: BigRational = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(40));
        let mut centers: Option<(Vec<(BigRational, BigRational)>, BigRational)> = None;
        for bits in [128u32, 256, 512, 1024] {
            let disks = adt_core::algebraic::certified_complex_roots(p, bits)
                .map_err(|e| ErgodicError::Certification(e.to_string()))?;
            let mut worst = BigRational::zero();
            let cs: Vec<(BigRational, BigRational)> = disks
                .into_iter()
                .map(|d| {
                    let v = eval_abs_sq(p, &d.re, &d.im);
                    if v > worst {
                        worst = v.clone();
                    }
                    (d.re, d.im)
                })
                .collect();
            if worst <= target {
                centers = Some((cs, worst));
                break;
            }
        }
        let (centers, worst) = centers.ok_or_else(|| {
            ErgodicError::Certification("eigenframe residual bound not reached".into())
        })?;
        let residual = worst.to_f64().unwrap_or(0.0).sqrt();

        let mut rho: Vec<Complex64> = centers
            .iter()
            .map(|(re, im)| Complex64::new(re.to_f64().unwrap(), im.to_f64().unwrap()))
            .collect();
        rho.sort_by(|a, b| {
            b.norm_sqr()
                .partial_cmp(&a.norm_sqr())
                .unwrap()
                .then(b.im.partial_cmp(&a.im).unwrap())
                .then(a.re.partial_cmp(&b.re).unwrap())
        });

        let pattern =
            classify_root_moduli(p).map_err(|e| ErgodicError::Certification(e.to_string()))?;

        // The rational representation doubles every analytic eigenvalue, so
        // the induced spectrum carries p with multiplicity two.
        let spectrum = Spectrum::from_components(g, vec![(p.clone(), 2)])
            .map_err(|e| ErgodicError::Certification(e.to_string()))?;
        let lambdas: Vec<f64> = (0..=g).map(|k| spectrum.lambda_f64(k)).collect();

        // Companion matrix with ones on the superdiagonal and the negated
        // coefficients in the last row; the lattice Z[i]^g splits into real
        // and imaginary parts, giving 2×2 scalar blocks.
        let n = 2 * g;
        let mut matrix = vec![vec![BigInt::zero(); n]; n];
        for r in 0..g - 1 {
            matrix[2 * r][2 * (r + 1)] = BigInt::one();
            matrix[2 * r + 1][2 * (r + 1) + 1] = BigInt::one();
        }
        for c in 0..g {
            let entry = -p.coeff(c);
            matrix[2 * (g - 1)][2 * c] = entry.clone();
            matrix[2 * (g - 1) + 1][2 * c + 1] = entry;
        }

        let t = TorusAutomorphism {
            g,
            charpoly: p.clone(),
            matrix,
            rho,
            pattern,
            lambdas,
            residual,
        };
        t.check_transport_direction();
        Ok(t)
    }

    /// Mode-transport convention check: the pullback of e^{2πi⟨l,x⟩} under
    /// x ↦ Ax is e^{2πi⟨Aᵀl,x⟩}. Verified at a handful of deterministic
    /// points before any run.
    fn check_transport_direction(&self) {
        let n = 2 * self.g;
        let a: Vec<Vec<f64>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|e| e.to_f64().unwrap()).collect())
            .collect();
        let tau = 2.0 * std::f64::consts::PI;
        let mut state = 0.37_f64;
        for trial in 0..4 {
            let l: Vec<f64> = (0..n).map(|i| ((trial + i) % 3) as f64 - 1.0).collect();
            let x: Vec<f64> = (0..n)
                .map(|_| {
                    state = (state * 997.0 + 0.123).fract();
                    state
                })
                .collect();
            let ax: Vec<f64> = (0..n).map(|r| (0..n).map(|c| a[r][c] * x[c]).sum()).collect();
            let atl: Vec<f64> = (0..n).map(|c| (0..n).map(|r| a[r][c] * l[r]).sum()).collect();
            let lhs: f64 = l.iter().zip(&ax).map(|(u, v)| u * v).sum();
            let rhs: f64 = atl.iter().zip(&x).map(|(u, v)| u * v).sum();
            let defect = (Complex64::from_polar(1.0, tau * lhs)
                - Complex64::from_polar(1.0, tau * rhs))
            .norm();
            assert!(defect < 1e-9, "mode transport convention violated");
        }
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn char_poly(&self) -> &IntPolynomial {
        &self.charpoly
    }

    /// The 2g × 2g integer matrix of the lattice action.
    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.matrix
    }

    /// Analytic eigenvalues in decreasing modulus order; index 0 is the
    /// frame coordinate dw_1.
    pub fn eigenvalues(&self) -> &[Complex64] {
        &self.rho
    }

    pub fn moduli_pattern(&self) -> &ModuliPattern {
        &self.pattern
    }

    /// Certified per-eigenpair residual bound of the numerical frame.
    pub fn residual_bound(&self) -> f64 {
        self.residual
    }

    /// Dynamical degree λ_k of the induced action on (k,k)-forms.
    pub fn lambda(&self, k: usize) -> f64 {
        self.lambdas[k]
    }

    /// True when the spectral radius is 1 (all eigenvalues on the unit
    /// circle): the automorphism is finite order up to isogeny and has zero
    /// entropy.
    pub fn zero_entropy(&self) -> bool {
        self.pattern.n_outside == 0
    }

    /// No analytic eigenvalue on the unit circle.
    pub fn is_hyperbolic(&self) -> bool {
        self.pattern.n_on == 0
    }

    /// Transported dual-lattice vector Aᵀ·l.
    pub fn transport_mode(&self, l: &[BigInt]) -> Vec<BigInt> {
        let n = 2 * self.g;
        assert_eq!(l.len(), n, "lattice vector dimension mismatch");
        (0..n)
            .map(|c| (0..n).map(|r| &self.matrix[r][c] * &l[r]).sum())
            .collect()
    }

    /// Pullback of a sparse form: every mode frequency is transported on the
    /// dual lattice and the coefficient picks up the frame factor
    /// ∏_{i∈I} ρ_i · ∏_{j∈J} ρ̄_j. Modes are never truncated.
    pub fn pullback_form(&self, omega: &FourierForm) -> FourierForm {
        assert_eq!(omega.g(), self.g, "form lives on a different torus");
        let mut out = FourierForm::new(omega.g(), omega.k());
        for (m, c) in omega.modes() {
            let mut factor = Complex64::new(1.0, 0.0);
            for &i in &m.left {
                factor *= self.rho[i];
            }
            for &j in &m.right {
                factor *= self.rho[j].conj();
            }
            out.accumulate(
                Mode {
                    l: self.transport_mode(&m.l),
                    left: m.left.clone(),
                    right: m.right.clone(),
                },
                c * factor,
            );
        }
        out
    }

    /// Whether the analytic spectrum has the averaging shape: one eigenvalue
    /// outside the unit circle, one inside, all others on it.
    pub fn averaging_hypothesis(&self) -> bool {
        self.pattern.n_outside == 1
            && self.pattern.n_inside == 1
            && self.pattern.n_on == self.g.saturating_sub(2)
    }

    /// The predicted constant limit of the normalized Cesàro averages of a
    /// (k,k)-form: Σ over multi-indices I containing the top frame direction
    /// of a_I · dw_I ∧ dw̄_I, where a_I is the zero-mode coefficient of
    /// ω_{I,I}. The volume normalization is fixed so that a constant
    /// function integrates to its own coefficient.
    pub fn predicted_limit(&self, omega: &FourierForm, k: usize) -> Result<FourierForm, ErgodicError> {
        if omega.g() != self.g || omega.k() != k {
            return Err(ErgodicError::InvalidMode(
                "form does not match the torus or the requested bidegree".into(),
            ));
        }
        if !self.averaging_hypothesis() {
            return Err(ErgodicError::HypothesisNotMet);
        }
        let mut limit = FourierForm::new(self.g, k);
        for (m, c) in omega.modes() {
            if m.left != m.right || !m.left.contains(&0) {
                continue;
            }
            if m.l.iter().any(|x| !x.is_zero()) {
                continue;
            }
            limit.accumulate(m.clone(), *c);
        }
        Ok(limit)
    }

    /// Runs the normalized Cesàro average (1/N) Σ_{j≤N} (fʲ)*Ω / λ_kʲ with
    /// exact mode tracking and the default mode budget.
    pub fn cesaro_average(
        &self,
        omega: &FourierForm,
        k: usize,
        n: usize,
    ) -> Result<(FourierForm, ConvergenceReport), ErgodicError> {
        self.cesaro_average_with_budget(omega, k, n, DEFAULT_MODE_BUDGET)
    }

    /// As `cesaro_average`, with an explicit cap on tracked modes. Exceeding
    /// the cap aborts the run and returns the partial average and report.
    pub fn cesaro_average_with_budget(
        &self,
        omega: &FourierForm,
        k: usize,
        n: usize,
        budget: usize,
    ) -> Result<(FourierForm, ConvergenceReport), ErgodicError> {
        if n == 0 {
            return Err(ErgodicError::InvalidMode(
                "average requires at least one step".into(),
            ));
        }
        if omega.g() != self.g || omega.k() != k {
            return Err(ErgodicError::InvalidMode(
                "form does not match the torus or the requested bidegree".into(),
            ));
        }
        let lambda_k = self.lambdas[k];
        let (limit, from_hypothesis) = match self.predicted_limit(omega, k) {
            Ok(f) => (f, true),
            Err(ErgodicError::HypothesisNotMet) => (FourierForm::new(self.g, k), false),
            Err(e) => return Err(e),
        };

        let mut checkpoints: Vec<usize> = Vec::new();
        let mut step = 1usize;
        while step < n {
            checkpoints.push(step);
            step *= 2;
        }
        checkpoints.push(n);

        let mut report = ConvergenceReport {
            checkpoints: Vec::new(),
            sup_errors: Vec::new(),
            mode_counts: Vec::new(),
            collinearity: Vec::new(),
            limit,
            limit_from_hypothesis: from_hypothesis,
            lambda_k,
        };

        let top: Vec<usize> = (0..k).collect();
        let zero_l = vec![BigInt::zero(); 2 * self.g];
        let inv_lambda = Complex64::new(1.0 / lambda_k, 0.0);
        let mut cur = omega.clone();
        let mut sum = FourierForm::new(self.g, k);
        let mut next_cp = 0usize;
        for j in 1..=n {
            cur = self.pullback_form(&cur);
            cur.scale(inv_lambda);
            sum.add_scaled(&cur, Complex64::new(1.0, 0.0));
            let at_checkpoint = next_cp < checkpoints.len() && checkpoints[next_cp] == j;
            let over_budget = sum.mode_count() > budget;
            if at_checkpoint || over_budget {
                let avg = sum.scaled(Complex64::new(1.0 / j as f64, 0.0));
                report.checkpoints.push(j);
                report.sup_errors.push(avg.sup_distance(&report.limit));
                report.mode_counts.push(sum.mode_count());
                let total = cur.l2_norm_sq();
                let aligned = cur.coefficient(&zero_l, &top, &top).norm_sqr();
                report.collinearity.push(if total > 0.0 {
                    ((total - aligned).max(0.0) / total).sqrt()
                } else {
                    0.0
                });
                if over_budget {
                    return Err(ErgodicError::ModeBudgetExceeded(Box::new(PartialRun {
                        average: avg,
                        report,
                        steps: j,
                    })));
                }
                if at_checkpoint {
                    next_cp += 1;
                }
            }
        }
        let avg = sum.scaled(Complex64::new(1.0 / n as f64, 0.0));
        Ok((avg, report))
    }

    /// Exact integer orbit of a dual-lattice vector: sup-norms of Aⁿ·l until
    /// the norm exceeds 10⁶ (verdict: diverges) or `n_max` steps pass.
    pub fn fourier_escape_check(&self, l: &[BigInt], n_max: usize) -> EscapeReport {
        let threshold = BigInt::from(ESCAPE_THRESHOLD);
        let sup = |v: &[BigInt]| -> BigInt {
            v.iter()
                .map(|x| x.abs())
                .max()
                .unwrap_or_else(BigInt::zero)
        };
        let mut current = l.to_vec();
        let mut norms = vec![sup(&current)];
        let mut diverges = norms[0] > threshold;
        for _ in 0..n_max {
            if diverges {
                break;
            }
            current = self.transport_mode(&current);
            let nn = sup(&current);
            diverges = nn > threshold;
            norms.push(nn);
        }
        EscapeReport { norms, diverges }
    }
}
