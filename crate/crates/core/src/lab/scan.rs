//! Evaluation scans: does `g(k) | f(k)` hold on the samples of a plan?

use rayon::prelude::*;

use super::sample::{sample_elements, SamplePlan, Sampler, DEFAULT_QUAD_BOX};
use crate::error::{Error, Result};
use crate::poly::{Degree, Poly, PolyRing};
use crate::ring::{HasFractionField, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    /// Maximum number of failures kept in the report.
    pub failure_cap: usize,
    pub parallel: bool,
    /// Half-width of the `Z[√d]` sampling box.
    pub quad_box: u64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            failure_cap: 20,
            parallel: true,
            quad_box: DEFAULT_QUAD_BOX,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanFailure<S, V> {
    /// Position of the sample in the plan.
    pub index: usize,
    pub k: S,
    pub g_k: V,
    pub f_k: V,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport<S, V> {
    pub samples: usize,
    /// `samples − skipped_zero_divisor`.
    pub tested: usize,
    pub skipped_zero_divisor: usize,
    /// Samples whose divisibility could not be decided within the factoring
    /// budget.
    pub inconclusive: usize,
    /// The first `failure_cap` failures, in sample order.
    pub failures: Vec<ScanFailure<S, V>>,
    pub total_failures: usize,
}

impl<S, V> ScanReport<S, V> {
    pub fn passed(&self) -> bool {
        self.total_failures == 0
    }
}

pub(crate) enum Outcome<V> {
    ZeroDivisor,
    Pass,
    Fail(V, V),
    Inconclusive,
}

pub(crate) fn par_map<S, T, F>(items: &[S], parallel: bool, f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    // indexed collect keeps sample order, so the result never depends on scheduling
    if parallel {
        items.par_iter().map(f).collect()
    } else {
        items.iter().map(f).collect()
    }
}

fn run_scan<S, V, F>(samples: Vec<S>, opts: &ScanOptions, eval: F) -> Result<ScanReport<S, V>>
where
    S: Sync + Send + Clone,
    V: Send,
    F: Fn(&S) -> Result<Outcome<V>> + Sync + Send,
{
    let outcomes = par_map(&samples, opts.parallel, |k| match eval(k) {
        Err(Error::FactorizationIncomplete { .. }) => Ok(Outcome::Inconclusive),
        other => other,
    });
    let mut report = ScanReport {
        samples: samples.len(),
        tested: 0,
        skipped_zero_divisor: 0,
        inconclusive: 0,
        failures: Vec::new(),
        total_failures: 0,
    };
    for (index, (k, outcome)) in samples.into_iter().zip(outcomes).enumerate() {
        match outcome? {
            Outcome::ZeroDivisor => report.skipped_zero_divisor += 1,
            Outcome::Pass => {}
            Outcome::Inconclusive => report.inconclusive += 1,
            Outcome::Fail(g_k, f_k) => {
                report.total_failures += 1;
                if report.failures.len() < opts.failure_cap {
                    report.failures.push(ScanFailure { index, k, g_k, f_k });
                }
            }
        }
    }
    report.tested = report.samples - report.skipped_zero_divisor;
    Ok(report)
}

fn check_point<R: Ring>(ring: &R, g_k: R::Elem, f_k: R::Elem) -> Result<Outcome<R::Elem>> {
    if ring.is_zero(&g_k) {
        return Ok(Outcome::ZeroDivisor);
    }
    Ok(if ring.divides(&g_k, &f_k)? {
        Outcome::Pass
    } else {
        Outcome::Fail(g_k, f_k)
    })
}

/// For each sample `k`: skip when `g(k) = 0`, otherwise record a failure when
/// `g(k) ∤ f(k)`.
pub fn scan_divisibility<R: Sampler>(
    ring: &PolyRing<R>,
    g: &Poly<R::Elem>,
    f: &Poly<R::Elem>,
    plan: &SamplePlan,
    opts: &ScanOptions,
) -> Result<ScanReport<R::Elem, R::Elem>> {
    if g.is_zero() {
        return Err(Error::DivisorZero);
    }
    let samples = sample_elements(ring.base(), plan, opts.quad_box);
    run_scan(samples, opts, |k| check_point(ring.base(), ring.eval(g, k), ring.eval(f, k)))
}

/// `y`-degrees of a bivariate pair. Both comparisons are reported; neither
/// is asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BivariateDegreeReport {
    pub deg_y_f: Degree,
    pub deg_y_g: Degree,
    pub f_at_least_g: bool,
    pub f_at_most_g: bool,
}

/// Scan of `g(a, b) | f(a, b)` for `f, g ∈ (R[x])[y]` over integer pairs
/// `(a, b)` substituted for `(x, y)`.
pub fn scan_divisibility_bivariate<R: Ring>(
    ring: &PolyRing<PolyRing<R>>,
    g: &Poly<Poly<R::Elem>>,
    f: &Poly<Poly<R::Elem>>,
    plan: &SamplePlan,
    opts: &ScanOptions,
) -> Result<(ScanReport<(R::Elem, R::Elem), R::Elem>, BivariateDegreeReport)> {
    if g.is_zero() {
        return Err(Error::DivisorZero);
    }
    let inner = ring.base();
    let base = inner.base();
    let samples: Vec<(R::Elem, R::Elem)> = plan
        .pairs()
        .into_iter()
        .map(|(a, b)| (base.from_int(&a), base.from_int(&b)))
        .collect();
    let eval = |p: &Poly<Poly<R::Elem>>, a: &R::Elem, b: &R::Elem| {
        let in_x = ring.eval(p, &inner.constant(b.clone()));
        inner.eval(&in_x, a)
    };
    let report = run_scan(samples, opts, |(a, b)| check_point(base, eval(g, a, b), eval(f, a, b)))?;
    let degrees = BivariateDegreeReport {
        deg_y_f: f.degree(),
        deg_y_g: g.degree(),
        f_at_least_g: f.degree() >= g.degree(),
        f_at_most_g: f.degree() <= g.degree(),
    };
    Ok((report, degrees))
}

/// `f = 0 or deg f ≥ deg g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeReport {
    pub deg_f: Degree,
    pub deg_g: Degree,
    pub dpp_holds: bool,
}

impl DegreeReport {
    pub fn of<E>(f: &Poly<E>, g: &Poly<E>) -> Self {
        DegreeReport {
            deg_f: f.degree(),
            deg_g: g.degree(),
            dpp_holds: f.is_zero() || f.degree() >= g.degree(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<E> {
    /// `g | f` with the verified quotient.
    Divides(Poly<E>),
    /// A sample `k` with `g(k) ≠ 0` and `g(k) ∤ f(k)`.
    Counterexample(ScanFailure<E, E>),
    /// Every sample passed but `g ∤ f`. Finite scans allow this.
    ScanPassNoDivide,
    /// The factoring budget prevented a decision.
    Inconclusive,
}

impl<E> Verdict<E> {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Divides(_) => "DIVIDES",
            Verdict::Counterexample(_) => "COUNTEREXAMPLE",
            Verdict::ScanPassNoDivide => "SCAN_PASS_NO_DIVIDE",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EppReport<E> {
    pub verdict: Verdict<E>,
    pub degree: DegreeReport,
    pub scan: ScanReport<E, E>,
}

/// Scan first; if no sample fails, try exact division.
pub fn epp_verdict<R: Sampler>(
    ring: &PolyRing<R>,
    g: &Poly<R::Elem>,
    f: &Poly<R::Elem>,
    plan: &SamplePlan,
    opts: &ScanOptions,
) -> Result<EppReport<R::Elem>> {
    let scan = scan_divisibility(ring, g, f, plan, opts)?;
    let degree = DegreeReport::of(f, g);
    let verdict = if let Some(first) = scan.failures.first() {
        Verdict::Counterexample(first.clone())
    } else {
        match ring.divides_exact(g, f) {
            Ok(Some(q)) => Verdict::Divides(q),
            Ok(None) if scan.inconclusive > 0 => Verdict::Inconclusive,
            Ok(None) => Verdict::ScanPassNoDivide,
            Err(Error::FactorizationIncomplete { .. }) => Verdict::Inconclusive,
            Err(e) => return Err(e),
        }
    };
    Ok(EppReport { verdict, degree, scan })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DringReport<E, K> {
    /// `f/g` in `K[x]`, when it is a polynomial and the exceptional set
    /// stayed small.
    pub quotient: Option<Poly<K>>,
    /// Samples with `g(k) ≠ 0` and `g(k) ∤ f(k)`.
    pub exceptional: Vec<E>,
    pub total_exceptional: usize,
    /// The exceptional set exceeded `deg f + deg g + 1`.
    pub exceeded_cap: bool,
}

/// Pointwise divisibility for almost all samples, then division in the
/// fraction field.
pub fn dring_quotient<R: Sampler + HasFractionField>(
    ring: &PolyRing<R>,
    f: &Poly<R::Elem>,
    g: &Poly<R::Elem>,
    plan: &SamplePlan,
    opts: &ScanOptions,
) -> Result<DringReport<R::Elem, <R::Frac as Ring>::Elem>> {
    let degree_sum = |p: &Poly<R::Elem>| p.degree().finite().unwrap_or(0);
    let cap = degree_sum(f) + degree_sum(g) + 1;
    let scan = scan_divisibility(ring, g, f, plan, &ScanOptions { failure_cap: cap + 1, ..*opts })?;
    let exceeded_cap = scan.total_failures > cap;
    let quotient = if exceeded_cap {
        None
    } else {
        ring.divides_in_fraction_field(g, f)?
    };
    Ok(DringReport {
        quotient,
        exceptional: scan.failures.into_iter().map(|e| e.k).collect(),
        total_exceptional: scan.total_failures,
        exceeded_cap,
    })
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;
    use crate::ring::{Integers, Rationals};

    fn zx() -> PolyRing<Integers> {
        PolyRing::new(Integers, "x")
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn fermat_scan_passes() {
        let r = zx();
        let report = scan_divisibility(
            &r,
            &r.from_ints([5]),
            &r.from_ints([0, -1, 0, 0, 0, 1]),
            &SamplePlan::range(-100, 100).unwrap(),
            &ScanOptions::default(),
        )
        .unwrap();
        assert!(report.passed());
        assert_eq!(report.tested, 201);
    }

    #[test]
    fn zero_divisor_values_are_skipped() {
        let r = zx();
        let report = scan_divisibility(
            &r,
            &r.from_ints([-1, 1]),
            &r.from_ints([-4, 0, -12, 0, 16]),
            &SamplePlan::range(-50, 50).unwrap(),
            &ScanOptions::default(),
        )
        .unwrap();
        assert!(report.passed());
        assert_eq!(report.skipped_zero_divisor, 1);
        assert_eq!(report.tested, 100);
    }

    #[test]
    fn field_non_example_fails_everywhere_but_one() {
        let r = zx();
        let report = scan_divisibility(
            &r,
            &r.x(),
            &r.one(),
            &SamplePlan::range(1, 10).unwrap(),
            &ScanOptions::default(),
        )
        .unwrap();
        let ks: Vec<BigInt> = report.failures.iter().map(|f| f.k.clone()).collect();
        assert_eq!(ks, (2..=10).map(big).collect::<Vec<_>>());
    }

    #[test]
    fn failure_cap_is_respected() {
        let r = zx();
        let opts = ScanOptions {
            failure_cap: 3,
            ..Default::default()
        };
        let report = scan_divisibility(&r, &r.x(), &r.one(), &SamplePlan::range(1, 10).unwrap(), &opts).unwrap();
        assert_eq!(report.failures.len(), 3);
        assert_eq!(report.total_failures, 9);
    }

    #[test]
    fn epp_examples() {
        let r = zx();
        let plan = SamplePlan::range(-30, 30).unwrap();
        let out = epp_verdict(
            &r,
            &r.from_ints([-1, 0, 2]),
            &r.from_ints([0, -4, 0, 8]),
            &plan,
            &ScanOptions::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::Divides(r.from_ints([0, 4])));
        assert!(out.degree.dpp_holds);

        let out = epp_verdict(
            &r,
            &r.from_ints([1, 0, 1]),
            &r.from_ints([1, 0, 0, 0, 1]),
            &SamplePlan::range(0, 20).unwrap(),
            &ScanOptions::default(),
        )
        .unwrap();
        match out.verdict {
            Verdict::Counterexample(c) => {
                assert_eq!(c.k, big(2));
                assert_eq!((c.g_k, c.f_k), (big(5), big(17)));
            }
            other => panic!("expected a counterexample, got {other:?}"),
        }

        let f = r.mul(&r.x(), &r.from_ints([1, 1]));
        let out = epp_verdict(&r, &r.x(), &f, &SamplePlan::default(), &ScanOptions::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Divides(r.from_ints([1, 1])));
    }

    #[test]
    fn scan_pass_without_division_is_reported() {
        // 2 | k² + k everywhere, yet 2 ∤ x² + x in Z[x]
        let r = zx();
        let out = epp_verdict(
            &r,
            &r.from_ints([2]),
            &r.from_ints([0, 1, 1]),
            &SamplePlan::range(-20, 20).unwrap(),
            &ScanOptions::default(),
        )
        .unwrap();
        assert_eq!(out.verdict, Verdict::ScanPassNoDivide);
    }

    #[test]
    fn dring_examples() {
        let r = zx();
        let qx = PolyRing::new(Rationals, "x");
        let plan = SamplePlan::range(-50, 50).unwrap();
        let opts = ScanOptions::default();
        let out = dring_quotient(&r, &r.from_ints([0, -1, 0, 0, 0, 1]), &r.from_ints([5]), &plan, &opts).unwrap();
        let fifth = BigRational::new(big(1), big(5));
        assert_eq!(
            out.quotient,
            Some(qx.poly(vec![qx.base().zero(), -fifth.clone(), qx.base().zero(), qx.base().zero(), qx.base().zero(), fifth]))
        );
        assert!(out.exceptional.is_empty());

        let out = dring_quotient(&r, &r.from_ints([-1, 0, 1]), &r.from_ints([-1, 1]), &plan, &opts).unwrap();
        assert_eq!(out.quotient, Some(qx.from_ints([1, 1])));

        let out = dring_quotient(&r, &r.from_ints([1, 0, 1]), &r.x(), &plan, &opts).unwrap();
        assert_eq!(out.quotient, None);
        assert!(out.exceeded_cap);
    }

    #[test]
    fn parallel_matches_sequential() {
        let r = zx();
        let g = r.from_ints([3, 1, 1]);
        let f = r.from_ints([7, 0, 2, 1]);
        let plan = SamplePlan::random(500, 11, -300, 300).unwrap();
        let par = scan_divisibility(&r, &g, &f, &plan, &ScanOptions::default()).unwrap();
        let seq = scan_divisibility(&r, &g, &f, &plan, &ScanOptions { parallel: false, ..Default::default() }).unwrap();
        assert_eq!(par, seq);
    }

    #[test]
    fn bivariate_scan_reports_both_degree_directions() {
        let zx = zx();
        let zxy = PolyRing::new(zx.clone(), "y");
        // g = x + y, f = (x + y)(x − y)
        let g = zxy.poly(vec![zx.x(), zx.one()]);
        let f = zxy.mul(&g, &zxy.poly(vec![zx.x(), zx.from_ints([-1])]));
        let (report, degrees) =
            scan_divisibility_bivariate(&zxy, &g, &f, &SamplePlan::range(-5, 5).unwrap(), &ScanOptions::default())
                .unwrap();
        assert!(report.passed());
        assert_eq!(report.skipped_zero_divisor, 11);
        assert!(degrees.f_at_least_g && !degrees.f_at_most_g);
    }
}
