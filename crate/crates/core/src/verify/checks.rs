use std::sync::Arc;

use num_complex::Complex;
use rand::Rng;

use super::sample::{self, MAX_FLAT_MODULUS};
use super::suite::{Suite, SuiteConfig, TOL_CLOSED_FORM, TOL_EXACT, TOL_FD};
use super::{fd_dbar_d, fd_wirtinger, Foliation, HoloDisk, ScalarField};
use crate::corpus;
use crate::error::Result;
use crate::flat::{
    self, build, build_double_cover, chain_period, homology_basis, teich_disk_deform, teich_disk_ext_closed_form,
    teich_disk_ext_jet, vertical_preserving_shear, TeichDisk,
};
use crate::report::{SlackTracker, VerificationReport};
use crate::torus::{self, TorusFoliation, TorusPoint, TorusTangent};

type C = Complex<f64>;

fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

fn rel_err(got: f64, want: f64) -> f64 {
    if want != 0.0 {
        (got - want).abs() / want.abs()
    } else {
        got.abs()
    }
}

fn rel_err_c(got: C, want: C) -> f64 {
    if want.norm() != 0.0 {
        (got - want).norm() / want.norm()
    } else {
        got.norm()
    }
}

fn pt(re: f64, im: f64) -> TorusPoint<f64> {
    TorusPoint::from_parts(re, im).expect("literal point in the upper half-plane")
}

fn fol(a: f64, b: f64) -> TorusFoliation<f64> {
    TorusFoliation::new(a, b).expect("literal nonzero foliation")
}

fn tangent(x: TorusPoint<f64>, v: C) -> TorusTangent<f64> {
    TorusTangent::new(x, v).expect("finite tangent")
}

/// Teichmüller disks through every shipped surface.
pub fn corpus_disks() -> Result<Vec<Arc<TeichDisk<f64>>>> {
    corpus::all().into_iter().map(|(_, g)| Ok(Arc::new(TeichDisk::new(build(&g)?)?))).collect()
}

/// `(E, E_λ, E_λλ̄)` of `λ ↦ Ext(τ₀ + λV)` at `λ`, from the closed forms.
fn torus_jet(disk: &HoloDisk, f: &TorusFoliation<f64>, lambda: C) -> Result<(f64, C, f64)> {
    let x = disk.torus_point(lambda)?;
    let HoloDisk::Torus { v, .. } = disk else { unreachable!("torus_point succeeded") };
    let t = tangent(x, *v);
    Ok((torus::extremal_length(&x, f), torus::gardiner_derivative(&x, f, &t)?, torus::levi_form(&x, f, &t)?))
}

// ---------------------------------------------------------------------------
// Building blocks with the signatures of the individual verifications.

fn log_psh_into(t: &mut SlackTracker, f: Foliation, disk: &HoloDisk, grid: &[C], h: f64) -> Result<()> {
    let field = ScalarField::LogExt(f);
    for g in grid {
        let lambda = g * disk.radius();
        let v = fd_dbar_d(&field, disk, lambda, disk.step(h))?;
        t.record(v, || format!("{disk} lambda={lambda}"));
    }
    Ok(())
}

/// Minimum over disks and grid points of the finite-difference `∂∂̄ log Ext(F)`.
///
/// Grid points are given relative to the unit disk and scaled by each
/// disk's radius; `h` is the relative step of [`HoloDisk::step`].
pub fn verify_log_psh(f: Foliation, disks: &[HoloDisk], grid: &[C], h: f64, tol: f64) -> Result<VerificationReport> {
    let mut t = SlackTracker::new("log-psh", tol);
    for d in disks {
        log_psh_into(&mut t, f, d, grid, h)?;
    }
    Ok(t.finish())
}

fn reciprocal_into(t: &mut SlackTracker, field: &ScalarField, disk: &HoloDisk, grid: &[C], h: f64) -> Result<()> {
    let ScalarField::Reciprocal { c: constant, .. } = field else { unreachable!("reciprocal field") };
    for g in grid {
        let lambda = g * disk.radius();
        let rho = field.eval(disk, lambda)?;
        let lower = if *constant > 0.0 { rho + 1.0 / constant } else { f64::INFINITY };
        let bound = (-rho).min(lower);
        let psh = fd_dbar_d(field, disk, lambda, disk.step(h))? / rho.abs();
        t.record(bound.min(psh), || format!("{disk} lambda={lambda} rho={rho}"));
    }
    Ok(())
}

/// Bounds `-1/c ≤ ρ < 0` and relative `∂∂̄ρ ≥ -tol` for `ρ = -1/(c + Σ aₖ Ext(Fₖ))`.
pub fn verify_reciprocal_psh(
    terms: Vec<(f64, Foliation)>,
    constant: f64,
    disks: &[HoloDisk],
    grid: &[C],
    h: f64,
    tol: f64,
) -> Result<VerificationReport> {
    let field = ScalarField::reciprocal(terms, constant)?;
    let mut t = SlackTracker::new("reciprocal", tol);
    for d in disks {
        reciprocal_into(&mut t, &field, d, grid, h)?;
    }
    Ok(t.finish())
}

/// Minimum over `H` with `Ext_{x₀}(H) = 1` of `i(F, H)² + i(G, H)²`,
/// sampled at `rays` evenly spaced slopes.
pub fn properness_constant(x0: &TorusPoint<f64>, f: &TorusFoliation<f64>, g: &TorusFoliation<f64>, rays: usize) -> f64 {
    (0..rays)
        .map(|k| {
            let theta = std::f64::consts::PI * k as f64 / rays as f64;
            let raw = TorusFoliation::new(theta.cos(), theta.sin()).expect("unit vector");
            let h = raw.scaled(torus::extremal_length(x0, &raw).sqrt().recip()).expect("positive scale");
            torus::intersection(f, &h).powi(2) + torus::intersection(g, &h).powi(2)
        })
        .fold(f64::INFINITY, f64::min)
}

/// `Ext_x(F) + Ext_x(G) ≥ e^{2 d(x₀, x)} m₀` along `rays` geodesic rays from `x₀`.
pub fn verify_properness(
    x0: &TorusPoint<f64>,
    f: &TorusFoliation<f64>,
    g: &TorusFoliation<f64>,
    rays: usize,
    tol: f64,
) -> Result<VerificationReport> {
    let mut t = SlackTracker::new("properness", tol);
    properness_into(&mut t, x0, f, g, rays)?;
    Ok(t.finish())
}

fn properness_into(
    t: &mut SlackTracker,
    x0: &TorusPoint<f64>,
    f: &TorusFoliation<f64>,
    g: &TorusFoliation<f64>,
    rays: usize,
) -> Result<()> {
    let m0 = properness_constant(x0, f, g, rays);
    t.record(m0, || format!("m0 at {x0}"));
    for k in 0..rays {
        let theta = std::f64::consts::TAU * k as f64 / rays as f64;
        for s in [0.25, 1.0, 2.0, 4.0, 8.0] {
            // Cayley transform of the disk point at hyperbolic distance s
            let w = C::from_polar((s / 2.0f64).tanh(), theta);
            let x = TorusPoint::new(c(x0.tau().re, 0.0) + c(0.0, x0.im()) * ((1.0 + w) / (1.0 - w)))?;
            let lhs = torus::extremal_length(&x, f) + torus::extremal_length(&x, g);
            let d = torus::kerckhoff_eigen(x0, &x);
            let slack = (lhs - (2.0 * d).exp() * m0) / lhs;
            t.record(slack, || format!("ray {k} s={s} x={x}"));
        }
    }
    Ok(())
}

fn sub_mean_into(t: &mut SlackTracker, x0: &TorusPoint<f64>, disk: &HoloDisk, r: f64, nodes: usize) -> Result<()> {
    let field = ScalarField::Distance { from: *x0 };
    let center = field.eval(disk, c(0.0, 0.0))?;
    let mut sum = 0.0;
    for z in sample::circle(nodes) {
        sum += field.eval(disk, z * r)?;
    }
    let mean = sum / nodes as f64;
    t.record(mean - center, || format!("x0={x0} {disk} r'={r}"));
    Ok(())
}

/// Sub-mean-value inequality for `d_T(x₀, ·)` on circles `(disk, r')`
/// centred at `λ = 0`, by the trapezoid rule with `nodes ≥ 64` nodes.
pub fn verify_distance_psh(
    x0: &TorusPoint<f64>,
    circles: &[(HoloDisk, f64)],
    nodes: usize,
    tol: f64,
) -> Result<VerificationReport> {
    let mut t = SlackTracker::new("distance", tol);
    for (d, r) in circles {
        sub_mean_into(&mut t, x0, d, *r, nodes.max(64))?;
    }
    Ok(t.finish())
}

fn horoball_into(t: &mut SlackTracker, f: Foliation, disk: &HoloDisk, grid: &[C], nodes: usize) -> Result<()> {
    let field = ScalarField::Ext(f);
    let r = disk.radius();
    let mut interior = (f64::NEG_INFINITY, c(0.0, 0.0));
    for g in grid {
        let v = field.eval(disk, g * r)?;
        if v > interior.0 {
            interior = (v, g * r);
        }
    }
    let mut boundary = f64::NEG_INFINITY;
    for z in sample::circle(nodes) {
        boundary = boundary.max(field.eval(disk, z * r)?);
    }
    t.record((boundary - interior.0) / boundary.abs(), || format!("{disk} interior max at {}", interior.1));
    Ok(())
}

/// Maximum principle for `Ext(F)`: the interior grid maximum does not
/// exceed the boundary-circle maximum (relative slack).
pub fn verify_horoball_diskconvex(
    f: Foliation,
    disks: &[HoloDisk],
    grid: &[C],
    nodes: usize,
    tol: f64,
) -> Result<VerificationReport> {
    let mut t = SlackTracker::new("horoball", tol);
    for d in disks {
        horoball_into(&mut t, f, d, grid, nodes)?;
    }
    Ok(t.finish())
}

/// `(|(log E)_λ|², E_λλ̄/(2E), (log E)_λλ̄)` by finite differences.
fn currents_fd(f: Foliation, disk: &HoloDisk, lambda: C, h: f64) -> Result<[f64; 3]> {
    let ext = ScalarField::Ext(f);
    let step = disk.step(h);
    let e = ext.eval(disk, lambda)?;
    let e_l = fd_wirtinger(&ext, disk, lambda, step)?;
    let e_ll = fd_dbar_d(&ext, disk, lambda, step)?;
    let log_ll = fd_dbar_d(&ScalarField::LogExt(f), disk, lambda, step)?;
    Ok([e_l.norm_sqr() / (e * e), e_ll / (2.0 * e), log_ll])
}

fn chain_slack(q: [f64; 3]) -> f64 {
    let scale = q.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        return 0.0;
    }
    (q[1] - q[0]).min(q[2] - q[1]) / scale
}

fn chain_spread(q: [f64; 3]) -> f64 {
    let scale = q.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        return 0.0;
    }
    ((q[0] - q[1]).abs().max((q[1] - q[2]).abs())) / scale
}

/// `|(log E)_λ|² ≤ E_λλ̄/(2E) ≤ (log E)_λλ̄` at every grid point, by finite
/// differences, relative to the largest of the three terms.
pub fn verify_currents_inequality(
    f: Foliation,
    disks: &[HoloDisk],
    grid: &[C],
    h: f64,
    tol: f64,
) -> Result<VerificationReport> {
    let mut t = SlackTracker::new("currents", tol);
    for d in disks {
        for g in grid {
            let lambda = g * d.radius();
            let q = currents_fd(f, d, lambda, h)?;
            t.record(chain_slack(q), || format!("{d} lambda={lambda} terms={q:?}"));
        }
    }
    Ok(t.finish())
}

/// `i(F,G)² ≤ Ext(F) Ext(G)` on random triples, relative to `Ext(F) Ext(G)`.
/// The first sample is the equality case `(i, (1,0), (0,1))`.
pub fn verify_minsky(samples: usize, rng: &mut impl Rng, tol: f64) -> VerificationReport {
    let mut t = SlackTracker::new("minsky", tol);
    minsky_into(&mut t, samples, rng);
    t.finish()
}

fn minsky_into(t: &mut SlackTracker, samples: usize, rng: &mut impl Rng) {
    let mut record = |x: TorusPoint<f64>, f: TorusFoliation<f64>, g: TorusFoliation<f64>| {
        let scale = torus::extremal_length(&x, &f) * torus::extremal_length(&x, &g);
        t.record(torus::minsky_slack(&x, &f, &g) / scale, || format!("tau={x} F={f} G={g}"));
    };
    record(pt(0.0, 1.0), fol(1.0, 0.0), fol(0.0, 1.0));
    for _ in 1..samples {
        let x = sample::point(rng);
        let f = sample::foliation(rng);
        let g = if rng.random_bool(0.05) { f } else { sample::foliation(rng) };
        record(x, f, g);
    }
}

// ---------------------------------------------------------------------------
// Suites.

pub(crate) fn closed_forms_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut t = cfg.tracker(Suite::ClosedForms, "spot-values", TOL_EXACT);
    let i = pt(0.0, 1.0);
    let two_i = pt(0.0, 2.0);
    let (e1, e2, e11) = (fol(1.0, 0.0), fol(0.0, 1.0), fol(1.0, 1.0));
    let one = c(1.0, 0.0);
    let mut check = |label: &str, got: C, want: C| t.record_error(rel_err_c(got, want), || label.to_string());
    let real = |x: f64| c(x, 0.0);

    check("Ext_i(1,0)", real(torus::extremal_length(&i, &e1)), one);
    check("Ext_2i(1,0)", real(torus::extremal_length(&two_i, &e1)), real(0.5));
    check("Ext_i(1,1)", real(torus::extremal_length(&i, &e11)), real(2.0));
    check("q_(1,0),i", torus::hubbard_masur(&i, &e1).coeff, real(-1.0));
    check("q_(1,0),2i", torus::hubbard_masur(&two_i, &e1).coeff, real(-0.25));
    check("q_(0,1),i", torus::hubbard_masur(&i, &e2).coeff, one);
    check("Levi(i,(1,0),1)", real(torus::levi_form(&i, &e1, &tangent(i, one))?), real(0.5));
    check("Levi(2i,(1,0),2)", real(torus::levi_form(&two_i, &e1, &tangent(two_i, real(2.0)))?), real(0.25));
    check("eta(i,(1,0),1)", torus::eta_v(&i, &e1, &tangent(i, one))?.coeff, c(0.0, -0.5));
    check("eta(i,(0,1),1)", torus::eta_v(&i, &e2, &tangent(i, one))?.coeff, c(0.0, -0.5));
    check("J_i((1,0),i)", torus::j_map(&i, &e1, &i).coeff, real(-1.0));
    check("J_i((1,0),2i)", torus::j_map(&i, &e1, &two_i).coeff, real(-0.25));
    check("J_i((0,1),i)", torus::j_map(&i, &e2, &i).coeff, one);
    check("gardiner(i,(1,0),i)", torus::gardiner_derivative(&i, &e1, &tangent(i, c(0.0, 1.0)))?, real(-0.5));
    check("gardiner(i,(1,0),1)", torus::gardiner_derivative(&i, &e1, &tangent(i, one))?, c(0.0, 0.5));
    check("i((1,0),(0,1))", real(torus::intersection(&e1, &e2)), one);
    check("i((1,2),(3,4))", real(torus::intersection(&fol(1.0, 2.0), &fol(3.0, 4.0))), real(2.0));
    check("minsky(1+i)", real(torus::minsky_slack(&pt(1.0, 1.0), &e1, &e2)), one);
    let x = pt(1.0, 2.0);
    check(
        "strong-positivity(1+2i,(3,1),1-i)",
        real(torus::strong_positivity_slack(&x, &fol(3.0, 1.0), &tangent(x, c(1.0, -1.0)))?),
        real(0.0),
    );
    Ok(vec![t.finish()])
}

pub(crate) fn levi_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut rng = cfg.rng();
    let mut t = cfg.tracker(Suite::Levi, "levi-eta-identity", TOL_EXACT);
    for _ in 0..cfg.samples_for(Suite::Levi) {
        let x = sample::point(&mut rng);
        let f = sample::foliation(&mut rng);
        let tan = tangent(x, sample::direction(&mut rng));
        let levi = torus::levi_form(&x, &f, &tan)?;
        let q = torus::hubbard_masur(&x, &f);
        let eta = torus::eta_v(&x, &f, &tan)?;
        let rhs = 2.0 * eta.norm().powi(2) / q.norm();
        t.record_error(rel_err(levi, rhs), || format!("tau={x} F={f} V={}", tan.v));
    }
    Ok(vec![t.finish()])
}

pub(crate) fn gardiner_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut rng = cfg.rng();
    let mut t = cfg.tracker(Suite::Gardiner, "wirtinger-vs-closed-form", TOL_FD);
    for _ in 0..cfg.samples_for(Suite::Gardiner) {
        let disk = sample::torus_disk(&mut rng);
        let f = sample::foliation(&mut rng);
        let x0 = disk.torus_point(c(0.0, 0.0))?;
        let HoloDisk::Torus { v, .. } = disk else { unreachable!() };
        let exact = torus::gardiner_derivative(&x0, &f, &tangent(x0, v))?;
        let fd = fd_wirtinger(&ScalarField::Ext(Foliation::Torus(f)), &disk, c(0.0, 0.0), disk.step(cfg.h))?;
        t.record_error(rel_err_c(fd, exact), || format!("{disk} F={f} fd={fd} exact={exact}"));
    }
    Ok(vec![t.finish()])
}

pub(crate) fn strong_positivity_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut rng = cfg.rng();
    let n = cfg.samples_for(Suite::StrongPositivity);
    let disks = corpus_disks()?;

    let mut torus_cf = cfg.tracker(Suite::StrongPositivity, "torus-closed-form", TOL_CLOSED_FORM);
    for _ in 0..n {
        let x = sample::point(&mut rng);
        let f = sample::foliation(&mut rng);
        let tan = tangent(x, sample::direction(&mut rng));
        let scale = torus::extremal_length(&x, &f) * torus::levi_form(&x, &f, &tan)?;
        let slack = torus::strong_positivity_slack(&x, &f, &tan)?;
        torus_cf.record_error(slack.abs() / scale, || format!("tau={x} F={f} V={}", tan.v));
    }

    let mut flat_cf = cfg.tracker(Suite::StrongPositivity, "flat-closed-form", TOL_CLOSED_FORM);
    for _ in 0..n {
        let disk = &disks[rng.random_range(0..disks.len())];
        let mu = sample::in_disk(&mut rng, MAX_FLAT_MODULUS);
        let (e, e_l, e_ll) = teich_disk_ext_jet(disk.ext(c(0.0, 0.0))?, mu);
        let from_periods = disk.ext(mu)?;
        let err = rel_err(from_periods, e).max((e * e_ll - 2.0 * e_l.norm_sqr()).abs() / (e * e_ll));
        flat_cf.record_error(err, || format!("area={} mu={mu}", disk.area()));
    }

    let mut fd = cfg.tracker(Suite::StrongPositivity, "finite-difference", TOL_FD);
    for k in 0..n {
        let (disk, f) = if k % 2 == 0 {
            (sample::torus_disk(&mut rng), Foliation::Torus(sample::foliation(&mut rng)))
        } else {
            (sample::flat_disk(&mut rng, &disks), Foliation::Vertical)
        };
        let field = ScalarField::Ext(f);
        let step = disk.step(cfg.h);
        let zero = c(0.0, 0.0);
        let e = field.eval(&disk, zero)?;
        let levi = fd_dbar_d(&field, &disk, zero, step)?;
        let grad = fd_wirtinger(&field, &disk, zero, step)?;
        let slack = (e * levi - 2.0 * grad.norm_sqr()) / (e * levi.abs());
        fd.record(slack, || format!("{disk} E={e} levi={levi} grad={grad}"));
    }
    Ok(vec![torus_cf.finish(), flat_cf.finish(), fd.finish()])
}

pub(crate) fn log_psh_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut rng = cfg.rng();
    let n = cfg.samples_for(Suite::LogPsh);
    let grid = sample::unit_grid(cfg.disk_grid);
    let disks = corpus_disks()?;

    let mut torus_psh = cfg.tracker(Suite::LogPsh, "torus", TOL_FD);
    let mut torus_acc = cfg.tracker(Suite::LogPsh, "torus-accuracy", TOL_FD);
    for _ in 0..n {
        let disk = sample::torus_disk(&mut rng);
        let f = sample::foliation(&mut rng);
        let HoloDisk::Torus { v, .. } = disk else { unreachable!() };
        let field = ScalarField::LogExt(Foliation::Torus(f));
        for g in &grid {
            let lambda = g * disk.radius();
            let fd = fd_dbar_d(&field, &disk, lambda, disk.step(cfg.h))?;
            let y = disk.torus_point(lambda)?.im();
            let exact = v.norm_sqr() / (4.0 * y * y);
            let at = || format!("{disk} F={f} lambda={lambda} fd={fd} exact={exact}");
            torus_psh.record(fd, at);
            torus_acc.record_error(rel_err(fd, exact), at);
        }
    }

    let mut flat_psh = cfg.tracker(Suite::LogPsh, "flat", TOL_FD);
    let mut flat_acc = cfg.tracker(Suite::LogPsh, "flat-accuracy", TOL_FD);
    for _ in 0..n {
        let disk = sample::flat_disk(&mut rng, &disks);
        let HoloDisk::Flat { center, .. } = disk else { unreachable!() };
        let field = ScalarField::LogExt(Foliation::Vertical);
        for g in &grid {
            let lambda = g * disk.radius();
            let fd = fd_dbar_d(&field, &disk, lambda, disk.step(cfg.h))?;
            let exact = (1.0 - (center + lambda).norm_sqr()).powi(-2);
            let at = || format!("{disk} lambda={lambda} fd={fd} exact={exact}");
            flat_psh.record(fd, at);
            flat_acc.record_error(rel_err(fd, exact), at);
        }
    }

    let mut spot = cfg.tracker(Suite::LogPsh, "spot-values", TOL_FD);
    let torus_disk = HoloDisk::torus(c(0.0, 1.0), c(1.0, 0.0), 0.5)?;
    let field = ScalarField::LogExt(Foliation::Torus(fol(1.0, 0.0)));
    let v = fd_dbar_d(&field, &torus_disk, c(0.0, 0.0), torus_disk.step(cfg.h))?;
    spot.record_error((v - 0.25).abs(), || format!("torus tau0=i F=(1,0) V=1: {v}"));
    let pillow = Arc::new(TeichDisk::new(build(&corpus::pillowcase(1.0, 1.0))?)?);
    let flat_disk = HoloDisk::flat(pillow, c(0.0, 0.0), MAX_FLAT_MODULUS)?;
    let v = fd_dbar_d(&ScalarField::LogExt(Foliation::Vertical), &flat_disk, c(0.0, 0.0), flat_disk.step(cfg.h))?;
    spot.record_error((v - 1.0).abs(), || format!("unit pillowcase origin: {v}"));

    Ok(vec![torus_psh.finish(), torus_acc.finish(), flat_psh.finish(), flat_acc.finish(), spot.finish()])
}

pub(crate) fn reciprocal_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut rng = cfg.rng();
    let n = cfg.samples_for(Suite::Reciprocal);
    let grid = sample::unit_grid(cfg.disk_grid);
    let disks = corpus_disks()?;
    let (e1, e2) = (fol(1.0, 0.0), fol(0.0, 1.0));
    let rho = |x: &TorusPoint<f64>| -1.0 / (1.0 + torus::extremal_length(x, &e1) + torus::extremal_length(x, &e2));

    let mut bounds = cfg.tracker(Suite::Reciprocal, "bounds-on-grid", TOL_EXACT);
    let m = cfg.grid;
    for i in 0..m {
        for j in 0..m {
            let frac = |k: usize| if m == 1 { 0.0 } else { k as f64 / (m - 1) as f64 };
            let x = pt(-1.0 + 2.0 * frac(j), 0.5 + 1.5 * frac(i));
            let r = rho(&x);
            bounds.record((r + 1.0).min(-r), || format!("tau={x} rho={r}"));
        }
    }

    let mut at_i = cfg.tracker(Suite::Reciprocal, "value-at-i", TOL_EXACT);
    let r = rho(&pt(0.0, 1.0));
    at_i.record_error((r + 1.0 / 3.0).abs(), || format!("rho(i)={r}"));

    let mut psh = cfg.tracker(Suite::Reciprocal, "psh", TOL_FD);
    for k in 0..n {
        let (disk, terms, constant) = match k {
            0 => {
                let disk = HoloDisk::torus(c(0.0, 1.0), sample::direction(&mut rng), 0.5)?;
                (disk, vec![(1.0, Foliation::Torus(e1)), (1.0, Foliation::Torus(e2))], 1.0)
            }
            _ if k % 4 == 3 => {
                let disk = sample::flat_disk(&mut rng, &disks);
                (disk, vec![(rng.random_range(0.1..2.0), Foliation::Vertical)], (k % 8 / 4) as f64)
            }
            _ => {
                let disk = sample::torus_disk(&mut rng);
                let terms = (0..rng.random_range(1..=3))
                    .map(|_| (rng.random_range(0.1..2.0), Foliation::Torus(sample::foliation(&mut rng))))
                    .collect();
                (disk, terms, (k % 2) as f64)
            }
        };
        let field = ScalarField::reciprocal(terms, constant)?;
        reciprocal_into(&mut psh, &field, &disk, &grid, cfg.h)?;
    }

    let mut proper = cfg.tracker(Suite::Reciprocal, "properness", TOL_EXACT);
    properness_into(&mut proper, &pt(0.0, 1.0), &e1, &e2, cfg.rays)?;

    Ok(vec![bounds.finish(), at_i.finish(), psh.finish(), proper.finish()])
}

pub(crate) fn distance_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut rng = cfg.rng();
    let n = cfg.samples_for(Suite::Distance);
    let i = pt(0.0, 1.0);

    let mut mean = cfg.tracker(Suite::Distance, "sub-mean-value", TOL_FD);
    sub_mean_into(&mut mean, &i, &HoloDisk::torus(c(0.0, 1.0), c(1.0, 0.0), 0.5)?, 0.1, cfg.circle_nodes)?;
    sub_mean_into(&mut mean, &i, &HoloDisk::torus(c(0.0, 2.0), c(1.0, 1.0), 1.0)?, 1.0, cfg.circle_nodes)?;
    for _ in 2..n {
        let x0 = sample::point(&mut rng);
        let disk = sample::torus_disk(&mut rng);
        let r = disk.radius() * rng.random_range(0.05..=1.0);
        sub_mean_into(&mut mean, &x0, &disk, r, cfg.circle_nodes)?;
    }

    let mut sym = cfg.tracker(Suite::Distance, "symmetry", TOL_EXACT);
    for _ in 0..n {
        let (x, y) = (sample::point(&mut rng), sample::point(&mut rng));
        let err = (torus::kerckhoff_eigen(&x, &y) - torus::kerckhoff_eigen(&y, &x)).abs();
        sym.record_error(err, || format!("x={x} y={y}"));
    }
    Ok(vec![mean.finish(), sym.finish()])
}

pub(crate) fn kerckhoff_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut rng = cfg.rng();
    let n = cfg.samples_for(Suite::Kerckhoff);
    let curves = torus::primitive_curves(cfg.bound);

    let mut brute = cfg.tracker(Suite::Kerckhoff, "brute-vs-eigen", TOL_CLOSED_FORM);
    let mut below = cfg.tracker(Suite::Kerckhoff, "brute-below-eigen", TOL_EXACT);
    let mut poincare = cfg.tracker(Suite::Kerckhoff, "eigen-vs-poincare", TOL_CLOSED_FORM);
    let mut pairs = Vec::with_capacity(n);
    for _ in 0..n {
        let (x, y) = (sample::point(&mut rng), sample::point(&mut rng));
        let eigen = torus::kerckhoff_eigen(&x, &y);
        let b = torus::kerckhoff_max_over(&x, &y, &curves);
        let at = || format!("x={x} y={y} brute={} at {:?} eigen={eigen}", b.distance, b.curve);
        brute.record_error((b.distance - eigen).abs(), at);
        below.record(eigen - b.distance, at);
        let half = torus::poincare_distance(&x, &y) / 2.0;
        poincare.record_error((eigen - half).abs(), || format!("x={x} y={y} eigen={eigen} half-poincare={half}"));
        pairs.push((x, y));
    }

    let mut monotone = cfg.tracker(Suite::Kerckhoff, "monotone-in-bound", TOL_EXACT);
    let ladder: Vec<u32> = [1, 2, 5, 10, 20, 50].into_iter().filter(|&b| b < cfg.bound).chain([cfg.bound]).collect();
    let lists: Vec<_> = ladder.iter().map(|&b| torus::primitive_curves(b)).collect();
    for (x, y) in pairs.iter().take(100) {
        let d: Vec<f64> = lists.iter().map(|l| torus::kerckhoff_max_over(x, y, l).distance).collect();
        for k in 1..d.len() {
            monotone.record(d[k] - d[k - 1], || format!("x={x} y={y} B={}", ladder[k]));
        }
    }

    let mut spot = cfg.tracker(Suite::Kerckhoff, "spot-values", TOL_EXACT);
    let (i, two_i) = (pt(0.0, 1.0), pt(0.0, 2.0));
    let half_log_two = 2f64.ln() / 2.0;
    spot.record_error((torus::kerckhoff_eigen(&i, &two_i) - half_log_two).abs(), || "eigen d(i,2i)".into());
    let b = torus::kerckhoff_max_over(&i, &two_i, &curves);
    spot.record_error((b.distance - half_log_two).abs(), || "brute d(i,2i)".into());
    spot.record_error((b.curve != (0, 1)) as u8 as f64, || format!("maximizer {:?}", b.curve));
    spot.record_error(torus::kerckhoff_eigen(&i, &i).abs(), || "d(i,i)".into());
    let d = torus::kerckhoff_eigen(&i, &pt(1.0, 1.0));
    spot.record_error((d - 1.5f64.acosh() / 2.0).abs(), || format!("d(i,1+i)={d}"));

    Ok(vec![brute.finish(), below.finish(), poincare.finish(), monotone.finish(), spot.finish()])
}

pub(crate) fn horoball_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut rng = cfg.rng();
    let n = cfg.samples_for(Suite::Horoball);
    let mut grid = sample::unit_grid(cfg.disk_grid);
    grid.push(c(0.0, 0.0));
    let disks = corpus_disks()?;

    let mut torus_t = cfg.tracker(Suite::Horoball, "torus", TOL_CLOSED_FORM);
    horoball_into(
        &mut torus_t,
        Foliation::Torus(fol(1.0, 0.0)),
        &HoloDisk::torus(c(0.0, 1.0), c(1.0, 0.0), 0.3)?,
        &grid,
        cfg.circle_nodes,
    )?;
    for _ in 1..n {
        let disk = sample::torus_disk(&mut rng);
        let f = Foliation::Torus(sample::foliation(&mut rng));
        horoball_into(&mut torus_t, f, &disk, &grid, cfg.circle_nodes)?;
    }

    let mut flat_t = cfg.tracker(Suite::Horoball, "flat", TOL_CLOSED_FORM);
    let pillow = Arc::new(TeichDisk::new(build(&corpus::pillowcase(1.0, 1.0))?)?);
    horoball_into(
        &mut flat_t,
        Foliation::Vertical,
        &HoloDisk::flat(pillow, c(0.0, 0.0), 0.5)?,
        &grid,
        cfg.circle_nodes,
    )?;
    for _ in 1..n {
        let disk = sample::flat_disk(&mut rng, &disks);
        horoball_into(&mut flat_t, Foliation::Vertical, &disk, &grid, cfg.circle_nodes)?;
    }
    Ok(vec![torus_t.finish(), flat_t.finish()])
}

pub(crate) fn currents_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut rng = cfg.rng();
    let n = cfg.samples_for(Suite::Currents);
    let grid = sample::unit_grid(cfg.disk_grid);
    let disks = corpus_disks()?;

    let mut torus_fd = cfg.tracker(Suite::Currents, "torus-fd", TOL_FD);
    let mut torus_eq = cfg.tracker(Suite::Currents, "torus-equality", TOL_CLOSED_FORM);
    for _ in 0..n {
        let disk = sample::torus_disk(&mut rng);
        let f = sample::foliation(&mut rng);
        for g in &grid {
            let lambda = g * disk.radius();
            let q = currents_fd(Foliation::Torus(f), &disk, lambda, cfg.h)?;
            torus_fd.record(chain_slack(q), || format!("{disk} F={f} lambda={lambda} terms={q:?}"));
            let (e, e_l, e_ll) = torus_jet(&disk, &f, lambda)?;
            let exact = [e_l.norm_sqr() / (e * e), e_ll / (2.0 * e), e_ll / e - e_l.norm_sqr() / (e * e)];
            torus_eq.record_error(chain_spread(exact), || format!("{disk} F={f} lambda={lambda} terms={exact:?}"));
        }
    }

    let mut flat_fd = cfg.tracker(Suite::Currents, "flat-fd", TOL_FD);
    let mut flat_eq = cfg.tracker(Suite::Currents, "flat-equality", TOL_CLOSED_FORM);
    for _ in 0..n {
        let disk = sample::flat_disk(&mut rng, &disks);
        let HoloDisk::Flat { disk: teich, center, .. } = &disk else { unreachable!() };
        let area = teich.ext(c(0.0, 0.0))?;
        for g in &grid {
            let lambda = g * disk.radius();
            let q = currents_fd(Foliation::Vertical, &disk, lambda, cfg.h)?;
            flat_fd.record(chain_slack(q), || format!("{disk} lambda={lambda} terms={q:?}"));
            let (e, e_l, e_ll) = teich_disk_ext_jet(area, center + lambda);
            let exact = [e_l.norm_sqr() / (e * e), e_ll / (2.0 * e), e_ll / e - e_l.norm_sqr() / (e * e)];
            flat_eq.record_error(chain_spread(exact), || format!("{disk} lambda={lambda} terms={exact:?}"));
        }
    }
    Ok(vec![torus_fd.finish(), torus_eq.finish(), flat_fd.finish(), flat_eq.finish()])
}

pub(crate) fn duality_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut rng = cfg.rng();
    let mut t = cfg.tracker(Suite::Duality, "j-derivative", TOL_FD);
    let mut record = |x0: TorusPoint<f64>, f: TorusFoliation<f64>, v: C| -> Result<()> {
        let err = torus::j_derivative_error(&x0, &f, &tangent(x0, v), cfg.h * x0.im())?;
        t.record_error(err, || format!("tau0={x0} F={f} V={v}"));
        Ok(())
    };
    record(pt(0.0, 1.0), fol(1.0, 0.0), c(1.0, 0.0))?;
    record(pt(1.0, 2.0), fol(2.0, 3.0), c(1.0, 1.0))?;
    for _ in 2..cfg.samples_for(Suite::Duality) {
        let x0 = sample::point(&mut rng);
        let f = sample::foliation(&mut rng);
        record(x0, f, sample::direction(&mut rng))?;
    }
    Ok(vec![t.finish()])
}

pub(crate) fn minsky_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut rng = cfg.rng();
    let mut t = cfg.tracker(Suite::Minsky, "inequality", TOL_EXACT);
    minsky_into(&mut t, cfg.samples_for(Suite::Minsky), &mut rng);
    Ok(vec![t.finish()])
}

pub(crate) fn periods_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut rng = cfg.rng();
    let n = cfg.samples_for(Suite::Periods);
    let mut gauss_bonnet = cfg.tracker(Suite::Periods, "gauss-bonnet", TOL_CLOSED_FORM);
    let mut riemann_hurwitz = cfg.tracker(Suite::Periods, "riemann-hurwitz", 0.0);
    let mut ext_area = cfg.tracker(Suite::Periods, "ext-equals-area", TOL_CLOSED_FORM);
    let mut deck = cfg.tracker(Suite::Periods, "deck-antisymmetry", 0.0);
    let mut shear = cfg.tracker(Suite::Periods, "shear-real-periods", TOL_EXACT);
    let mut shear_ext = cfg.tracker(Suite::Periods, "shear-ext", TOL_CLOSED_FORM);
    let mut disk_ext = cfg.tracker(Suite::Periods, "teich-disk-ext", TOL_CLOSED_FORM);
    let mut disk_area = cfg.tracker(Suite::Periods, "teich-disk-area", TOL_CLOSED_FORM);

    let disks = corpus_disks()?;
    for (name, g) in corpus::all() {
        let s = build(&g)?;
        gauss_bonnet.record_error(s.gauss_bonnet_defect().abs(), || name.to_string());
        let cover = build_double_cover(&s);
        if cover.is_connected() {
            riemann_hurwitz.record(if cover.riemann_hurwitz_holds() { 0.0 } else { -1.0 }, || name.to_string());
        }
        let basis = flat::odd_symplectic_basis(&cover)?;
        let e = flat::ext_bilinear(&flat::periods(&cover, &basis)?, &basis)?;
        ext_area.record_error(rel_err(e, s.area()), || format!("{name}: ext={e} area={}", s.area()));
        for z in &homology_basis(&cover).cycles {
            let p = chain_period(&cover, z)?;
            let q = chain_period(&cover, &z.deck())?;
            deck.record_error((p + q).norm(), || format!("{name}: cycle {z}"));
        }
    }

    for _ in 0..n {
        let disk = &disks[rng.random_range(0..disks.len())];
        let (s, t) = (rng.random_range(-2.0..=2.0), rng.random_range(0.25..=4.0));
        let sheared = vertical_preserving_shear(disk.surface(), s, t)?;
        let cover = build_double_cover(&sheared);
        for (z, before) in disk.basis().cycles.iter().zip(&disk.periods().values) {
            let after = chain_period(&cover, z)?;
            shear.record_error((after.re - before.re).abs() / before.norm().max(1.0), || {
                format!("area={} s={s} t={t} cycle {z}", disk.area())
            });
        }
        let e = flat::ext_bilinear(&flat::periods(&cover, disk.basis())?, disk.basis())?;
        shear_ext.record_error(rel_err(e, t * disk.area()), || format!("area={} s={s} t={t}", disk.area()));
    }

    for _ in 0..n {
        let disk = &disks[rng.random_range(0..disks.len())];
        let lambda = sample::in_disk(&mut rng, MAX_FLAT_MODULUS);
        let want = teich_disk_ext_closed_form(disk.area(), lambda);
        let got = disk.ext(lambda)?;
        disk_ext.record_error(rel_err(got, want), || format!("area={} lambda={lambda}", disk.area()));
        let deformed = teich_disk_deform(disk.surface(), lambda)?;
        let want = disk.area() * (1.0 - lambda.norm_sqr());
        disk_area.record_error(rel_err(deformed.area(), want), || format!("area={} lambda={lambda}", disk.area()));
    }

    Ok(vec![
        gauss_bonnet.finish(),
        riemann_hurwitz.finish(),
        ext_area.finish(),
        deck.finish(),
        shear.finish(),
        shear_ext.finish(),
        disk_ext.finish(),
        disk_area.finish(),
    ])
}
