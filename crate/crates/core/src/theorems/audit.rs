use serde::Serialize;

use crate::arith::{in_integer_span, QuadraticNumber, Rational};
use crate::iet::{translation_vector, Convention, IetParameters};
use crate::subst::{
    kernel_vector, spectral_class, Classification, IncidenceMatrix, Morphism, SpectralClass,
    SubstError,
};
use crate::words::{Alphabet, Word};

use super::{
    is_sturm, recover_parameters, theorem_a_certificate, Certificate, CertificateOptions,
    RecoveredParameters, Regeneration, SturmVerdict, TheoremError, REGENERATION_THRESHOLD,
};

pub const PASS_NOTE: &str = "pass means no necessary condition violated";

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "kebab-case")]
pub enum Overall {
    Pass,
    Fail(String),
    NotApplicable(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EpsilonRoute {
    /// Left Perron eigenvector of the incidence matrix.
    PerronEigenvector,
    /// Letter frequencies of the sampled fixed point.
    Frequencies,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FixedPointInfo {
    pub seed: char,
    /// The audited substitution is `φ^power`.
    pub power: usize,
    pub audited_morphism: String,
    pub length: usize,
    pub head: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FrequencyCheck {
    pub empirical: f64,
    pub exact: f64,
    pub difference: f64,
    pub tolerance: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExactParameters {
    pub params: IetParameters,
    pub regeneration: Regeneration,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditReport {
    pub morphism: String,
    pub prefix_length: usize,
    pub incidence_matrix: IncidenceMatrix,
    pub determinant: i128,
    pub primitive: bool,
    pub fixed_point: Option<FixedPointInfo>,
    pub certificate: Option<Certificate>,
    pub fixed_point_consistent: bool,
    pub spectral_class: Option<SpectralClass>,
    pub epsilon: Option<QuadraticNumber>,
    pub epsilon_route: Option<EpsilonRoute>,
    pub frequency_check: Option<FrequencyCheck>,
    pub non_degenerate: Option<bool>,
    pub sturm_verdict: Option<SturmVerdict>,
    pub eigenvector_relation_holds: Option<bool>,
    pub non_singular: bool,
    pub quadratic_unit: bool,
    pub determinant_is_unit: bool,
    pub conjugate_eigenvector_uniform_sign: Option<bool>,
    pub exact_parameters: Option<ExactParameters>,
    pub parameters_in_field: Option<bool>,
    pub scaling_relation_holds: Option<bool>,
    pub sampled_recovery: Option<RecoveredParameters>,
    pub overall: Overall,
    pub note: &'static str,
}

impl AuditReport {
    pub fn is_pass(&self) -> bool {
        self.overall == Overall::Pass
    }

    pub fn is_fail(&self) -> bool {
        matches!(self.overall, Overall::Fail(_))
    }

    /// The sampled recovery regenerated the fixed point above the threshold.
    pub fn recovery_passed(&self) -> bool {
        self.sampled_recovery
            .as_ref()
            .is_some_and(|r| r.regeneration.fraction >= REGENERATION_THRESHOLD)
    }
}

fn rational(k: i64) -> QuadraticNumber {
    QuadraticNumber::from_integer(k)
}

/// `(ε, l)` from the normalized density vector `ρ ∝ (α, β, γ)`.
fn parameters_from_density(rho: &[QuadraticNumber]) -> (QuadraticNumber, QuadraticNumber) {
    let one_plus_b = rational(1) + &rho[1];
    let epsilon = &(&rho[0] + &rho[1]) / &one_plus_b;
    let l = one_plus_b.inverse().expect("positive");
    (epsilon, l)
}

/// Normalized left eigenvector of `m` for `lambda`.
fn left_eigenvector(m: &IncidenceMatrix, lambda: &QuadraticNumber) -> Option<Vec<QuadraticNumber>> {
    let n = m.row_count();
    let a: Vec<Vec<QuadraticNumber>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let entry = rational(m.get(j, i));
                    if i == j {
                        &entry - lambda
                    } else {
                        entry
                    }
                })
                .collect()
        })
        .collect();
    let v = kernel_vector(&a)?;
    let total: QuadraticNumber = v.iter().cloned().sum();
    if total.is_zero() {
        return None;
    }
    Some(v.iter().map(|x| x / &total).collect())
}

/// The exact `c` forced by `E_{ψ(X)} = Λ′E_X`: the left end of `I` is the
/// least left end of the blocks `Λ′I_X + t_w`, `w` a proper prefix of `ψ(X)`.
fn exact_c(
    psi: &Morphism,
    epsilon: &QuadraticNumber,
    l: &QuadraticNumber,
    conj: &QuadraticNumber,
) -> QuadraticNumber {
    let alpha = epsilon + l - rational(1);
    let t = translation_vector(epsilon);
    let ends = if conj.is_positive() {
        [rational(0), alpha.clone(), epsilon.clone()]
    } else {
        [alpha.clone(), epsilon.clone(), l.clone()]
    };
    let denominator = rational(1) - conj;
    let mut best: Option<QuadraticNumber> = None;
    for x in 0..3u8 {
        let image = psi.image(x);
        let mut shift = QuadraticNumber::zero();
        for &y in image {
            let candidate = &(&(conj * &ends[x as usize]) + &shift) / &denominator;
            if best.as_ref().is_none_or(|b| &candidate < b) {
                best = Some(candidate);
            }
            shift = &shift + &t[y as usize];
        }
    }
    best.expect("non-empty images")
}

fn regenerate_exactly(params: &IetParameters, u: &Word) -> Regeneration {
    let left = Regeneration::compare(params, Convention::LeftClosed, u);
    if left.is_exact() {
        return left;
    }
    let right = Regeneration::compare(params, Convention::RightClosed, u);
    if right.matched_letters > left.matched_letters {
        right
    } else {
        left
    }
}

/// `g(ψ(w)) = Λ′·g(w)` for every prefix `w` of length `0..=n`, with
/// `g(ψ(w))` read off the fixed point at index `|ψ(w)|`.
fn scaling_holds(
    psi: &Morphism,
    seed: u8,
    n: usize,
    epsilon: &QuadraticNumber,
    conj: &QuadraticNumber,
) -> Result<bool, SubstError> {
    let short = psi.fixed_point_prefix(Some(seed), n)?;
    let long_len: usize = short.letters().iter().map(|&x| psi.image(x).len()).sum();
    let long = psi.fixed_point_prefix(Some(seed), long_len.max(n))?;
    let g = crate::words::g_values(long.letters(), epsilon);
    let mut image_len = 0;
    for (i, &x) in short
        .letters()
        .iter()
        .enumerate()
        .chain(std::iter::once((n, &0)))
    {
        if g[image_len] != conj * &g[i] {
            return Ok(false);
        }
        if i < n {
            image_len += psi.image(x).len();
        }
    }
    Ok(true)
}

fn sampled_frequency(u: &Word) -> f64 {
    let counts = u.counts();
    let (a, b, c) = (counts[0] as f64, counts[1] as f64, counts[2] as f64);
    (a + b) / (a + 2.0 * b + c)
}

/// Audits `φ` against the necessary conditions for a non-degenerate 3iet
/// fixed point: Sturm slope, `M t = Λ′ t`, non-singular matrix, quadratic
/// unit, uniform-sign conjugate eigenvector, `c, l ∈ Q(ε)` and the scaling
/// `g(φ(w)) = Λ′g(w)`.
pub fn theorem_b_audit(m: &Morphism, prefix_len: usize) -> Result<AuditReport, TheoremError> {
    if m.source() != &Alphabet::ternary() || !m.is_substitution() {
        return Err(TheoremError::NotTernarySubstitution);
    }
    let incidence = m.incidence();
    let determinant = incidence.determinant()?;
    let mut report = AuditReport {
        morphism: m.to_string(),
        prefix_length: prefix_len,
        primitive: incidence.is_primitive()?,
        incidence_matrix: incidence,
        determinant,
        fixed_point: None,
        certificate: None,
        fixed_point_consistent: false,
        spectral_class: None,
        epsilon: None,
        epsilon_route: None,
        frequency_check: None,
        non_degenerate: None,
        sturm_verdict: None,
        eigenvector_relation_holds: None,
        non_singular: determinant != 0,
        quadratic_unit: false,
        determinant_is_unit: determinant.abs() == 1,
        conjugate_eigenvector_uniform_sign: None,
        exact_parameters: None,
        parameters_in_field: None,
        scaling_relation_holds: None,
        sampled_recovery: None,
        overall: Overall::NotApplicable(String::new()),
        note: PASS_NOTE,
    };
    let not_applicable = |mut report: AuditReport, reason: String| {
        report.overall = Overall::NotApplicable(reason);
        Ok(report)
    };

    let fixed = match m.fixed_point(None, prefix_len) {
        Ok(f) => f,
        Err(SubstError::NoFixedPoint) => {
            return not_applicable(report, "no expanding fixed letter".into())
        }
        Err(e) => return Err(e.into()),
    };
    let psi = m.power(fixed.power)?;
    let u = fixed.prefix;
    report.fixed_point = Some(FixedPointInfo {
        seed: Alphabet::ternary().letter(fixed.seed),
        power: fixed.power,
        audited_morphism: psi.to_string(),
        length: u.len(),
        head: u.prefix(60).to_string(),
    });
    let certificate = match theorem_a_certificate(
        &u,
        CertificateOptions {
            min_length: 0,
            max_factor_length: None,
        },
    ) {
        Ok(c) => c,
        Err(TheoremError::MissingLetter(x)) => {
            return not_applicable(
                report,
                format!("letter {x} does not occur in the fixed point"),
            )
        }
        Err(e) => return Err(e),
    };
    report.fixed_point_consistent = certificate.is_consistent();
    let name = certificate.verdict.name();
    report.certificate = Some(certificate);
    if !report.fixed_point_consistent {
        return not_applicable(
            report,
            format!("fixed point fails the 3iet certificate ({name})"),
        );
    }

    let matrix = psi.incidence();
    let spectral = spectral_class(&matrix)?;
    report.quadratic_unit = spectral.classification == Classification::QuadraticUnit;
    report.spectral_class = Some(spectral.clone());
    let empirical = sampled_frequency(&u);

    let (Some(lambda), Some(conj)) = (spectral.dominant.clone(), spectral.conjugate.clone()) else {
        // Rational or cubic Λ: only a frequency-based recovery is available.
        let estimate = QuadraticNumber::from_rational(Rational::new(
            (u.counts()[0] + u.counts()[1]).into(),
            (u.len() + u.counts()[1]).into(),
        ));
        report.epsilon = Some(estimate.clone());
        report.epsilon_route = Some(EpsilonRoute::Frequencies);
        report.sampled_recovery = recover_parameters(&u, Some(&estimate)).ok();
        let regenerates = report.recovery_passed();
        return match spectral.classification {
            Classification::Cubic if regenerates && report.primitive => {
                report.overall = Overall::Fail(
                    "dominant eigenvalue is cubic although the fixed point regenerates as a 3iet word; \
                     this contradicts a proven theorem and indicates an artifact bug"
                        .into(),
                );
                Ok(report)
            }
            Classification::Cubic => not_applicable(report, "dominant eigenvalue is cubic and the sampled recovery does not regenerate the fixed point".into()),
            _ => not_applicable(report, "dominant eigenvalue is rational, so letter densities are rational".into()),
        };
    };

    let Some(rho) = left_eigenvector(&matrix, &lambda) else {
        return not_applicable(report, "Perron eigenvalue is not simple".into());
    };
    if !rho.iter().all(QuadraticNumber::is_positive) {
        return not_applicable(report, "density vector is not positive".into());
    }
    let (epsilon, l) = parameters_from_density(&rho);
    report.epsilon = Some(epsilon.clone());
    report.epsilon_route = Some(EpsilonRoute::PerronEigenvector);
    let exact = epsilon.to_f64();
    let tolerance = (1e-3f64).max(100.0 / prefix_len.max(1) as f64);
    let difference = (empirical - exact).abs();
    report.frequency_check = Some(FrequencyCheck {
        empirical,
        exact,
        difference,
        tolerance,
        holds: difference <= tolerance,
    });
    let non_degenerate = !epsilon.is_rational()
        && !in_integer_span(&l, &epsilon).map_err(crate::iet::IetError::from)?;
    report.non_degenerate = Some(non_degenerate);
    report.sturm_verdict = Some(is_sturm(&epsilon));

    let t = translation_vector(&epsilon);
    let mt = matrix.apply_to_column(&t)?;
    report.eigenvector_relation_holds = Some(mt.iter().zip(&t).all(|(a, b)| a == &(&conj * b)));
    let t_conj = t.clone().map(|x| x.conjugate());
    report.conjugate_eigenvector_uniform_sign = Some(
        t_conj.iter().all(QuadraticNumber::is_positive)
            || t_conj.iter().all(QuadraticNumber::is_negative),
    );
    report.scaling_relation_holds = Some(scaling_holds(
        &psi, fixed.seed, prefix_len, &epsilon, &conj,
    )?);

    let in_field = if conj.abs() < rational(1) {
        let c = exact_c(&psi, &epsilon, &l, &conj);
        match IetParameters::new(epsilon.clone(), l.clone(), c) {
            Ok(params) => {
                let regeneration = regenerate_exactly(&params, &u);
                let same_field =
                    QuadraticNumber::field_of([&epsilon, params.l(), params.c()]).is_ok();
                let holds = regeneration.is_exact() && same_field;
                report.exact_parameters = Some(ExactParameters {
                    params,
                    regeneration,
                });
                holds
            }
            Err(_) => false,
        }
    } else {
        false
    };
    report.parameters_in_field = Some(in_field);
    report.sampled_recovery = recover_parameters(&u, Some(&epsilon)).ok();

    if !report.primitive {
        return not_applicable(report, "substitution is not primitive".into());
    }
    if !non_degenerate {
        return not_applicable(report, "parameters are degenerate (l ∈ Z + Zε)".into());
    }
    let checks = [
        (
            "epsilon is not a Sturm number",
            report.sturm_verdict.is_some_and(|v| v.is_sturm),
        ),
        (
            "M t ≠ Λ′ t",
            report.eigenvector_relation_holds == Some(true),
        ),
        ("incidence matrix is singular", report.non_singular),
        (
            "dominant eigenvalue is not a quadratic unit",
            report.quadratic_unit,
        ),
        (
            "conjugate translation vector has mixed signs",
            report.conjugate_eigenvector_uniform_sign == Some(true),
        ),
        (
            "no exact c, l in Q(ε) regenerates the fixed point",
            in_field,
        ),
        (
            "g(φ(w)) ≠ Λ′ g(w) on some prefix",
            report.scaling_relation_holds == Some(true),
        ),
    ];
    let failures: Vec<&str> = checks
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(reason, _)| *reason)
        .collect();
    report.overall = if failures.is_empty() {
        Overall::Pass
    } else {
        Overall::Fail(format!(
            "{}; a verified 3iet fixed point violating a proven necessary condition indicates an artifact bug",
            failures.join("; ")
        ))
    };
    Ok(report)
}
