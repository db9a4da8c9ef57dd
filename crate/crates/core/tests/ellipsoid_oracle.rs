//! Analytic oracle for discrete curvature on a triaxial ellipsoid.
//!
//! Mean and Gaussian curvature admit closed implicit-surface formulas: for
//! `F = x²/a² + y²/b² + z²/c² − 1`, at a surface point,
//!
//! ```text
//!   H = (ΔF |∇F|² − ∇Fᵀ(Hess F)∇F) / (2 |∇F|³),
//!   K = ∇Fᵀ adj(Hess F) ∇F / |∇F|⁴,
//! ```
//!
//! both positive for this convex surface with the outward normal. Surface
//! integrals are computed by a dense parametric quadrature that shares no
//! code with the mesh pipeline (trapezoid in the periodic angle, Simpson in
//! the polar angle), and the quadrature validates *itself* by reproducing
//! `∫K dA = 4π` from Gauss–Bonnet. Discrete curvatures and integrals from
//! the triangle mesh must then land on these targets.

use steklov_heat::{ellipsoid, integrate_invariants, mesh_curvatures};

const AXES: [f64; 3] = [1.3, 1.0, 0.7];

/// Analytic mean curvature at a surface point.
fn mean_implicit(axes: [f64; 3], x: f64, y: f64, z: f64) -> f64 {
    let grad = [
        2.0 * x / (axes[0] * axes[0]),
        2.0 * y / (axes[1] * axes[1]),
        2.0 * z / (axes[2] * axes[2]),
    ];
    let hess = [
        2.0 / (axes[0] * axes[0]),
        2.0 / (axes[1] * axes[1]),
        2.0 / (axes[2] * axes[2]),
    ];
    let g: f64 = grad.iter().map(|v| v * v).sum();
    let trace: f64 = hess.iter().sum();
    let s: f64 = grad.iter().zip(hess.iter()).map(|(v, h)| h * v * v).sum();
    (trace * g - s) / (2.0 * g.powf(1.5))
}

/// Analytic Gaussian curvature at a surface point.
fn gauss_implicit(axes: [f64; 3], x: f64, y: f64, z: f64) -> f64 {
    let grad = [
        2.0 * x / (axes[0] * axes[0]),
        2.0 * y / (axes[1] * axes[1]),
        2.0 * z / (axes[2] * axes[2]),
    ];
    let hess = [
        2.0 / (axes[0] * axes[0]),
        2.0 / (axes[1] * axes[1]),
        2.0 / (axes[2] * axes[2]),
    ];
    let adj = [hess[1] * hess[2], hess[0] * hess[2], hess[0] * hess[1]];
    let g: f64 = grad.iter().map(|v| v * v).sum();
    let num: f64 = grad.iter().zip(adj.iter()).map(|(v, a)| a * v * v).sum();
    num / (g * g)
}

/// Parametric quadrature of `f(p) dA` over the ellipsoid: Simpson in
/// `θ ∈ [0, π]`, trapezoid in the periodic `φ`.
fn quadrature(axes: [f64; 3], f: impl Fn(f64, f64, f64) -> f64) -> f64 {
    let n_theta = 512usize; // even, for Simpson
    let n_phi = 512usize;
    let d_theta = std::f64::consts::PI / n_theta as f64;
    let d_phi = std::f64::consts::TAU / n_phi as f64;
    let mut total = 0.0f64;
    for it in 0..=n_theta {
        let theta = it as f64 * d_theta;
        let simpson = if it == 0 || it == n_theta {
            1.0
        } else if it % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let (st, ct) = theta.sin_cos();
        let mut ring = 0.0f64;
        for ip in 0..n_phi {
            let phi = ip as f64 * d_phi;
            let (sp, cp) = phi.sin_cos();
            let p = [axes[0] * st * cp, axes[1] * st * sp, axes[2] * ct];
            let p_theta = [axes[0] * ct * cp, axes[1] * ct * sp, -axes[2] * st];
            let p_phi = [-axes[0] * st * sp, axes[1] * st * cp, 0.0];
            let cross = [
                p_theta[1] * p_phi[2] - p_theta[2] * p_phi[1],
                p_theta[2] * p_phi[0] - p_theta[0] * p_phi[2],
                p_theta[0] * p_phi[1] - p_theta[1] * p_phi[0],
            ];
            let area_el = cross.iter().map(|v| v * v).sum::<f64>().sqrt();
            ring += f(p[0], p[1], p[2]) * area_el;
        }
        total += simpson * ring * d_phi;
    }
    total * d_theta / 3.0
}

#[test]
fn quadrature_validates_itself_by_gauss_bonnet() {
    let total_gauss = quadrature(AXES, |x, y, z| gauss_implicit(AXES, x, y, z));
    assert!(
        (total_gauss - 4.0 * std::f64::consts::PI).abs() < 1e-9,
        "∫K dA = {total_gauss}"
    );
}

#[test]
fn discrete_curvatures_track_the_implicit_formulas() {
    let mesh = ellipsoid(AXES[0], AXES[1], AXES[2], 4).unwrap();
    let curv = mesh_curvatures(&mesh).unwrap();
    let mut h_sq_err = 0.0f64;
    let mut k_sq_err = 0.0f64;
    let mut h_max = 0.0f64;
    let mut k_max = 0.0f64;
    let nv = mesh.vertex_count() as f64;
    for (i, p) in mesh.vertices().iter().enumerate() {
        let h_ref = mean_implicit(AXES, p.x, p.y, p.z);
        let k_ref = gauss_implicit(AXES, p.x, p.y, p.z);
        let h_rel = (curv.mean[i] - h_ref).abs() / h_ref;
        let k_rel = (curv.gauss[i] - k_ref).abs() / k_ref;
        h_sq_err += h_rel * h_rel;
        k_sq_err += k_rel * k_rel;
        h_max = h_max.max(h_rel);
        k_max = k_max.max(k_rel);
    }
    // Observed at this subdivision: RMS ≈ 2.6e-3 (H) and 4.4e-3 (K),
    // maxima an order larger near the stretched poles; bounds sit at
    // roughly twice the observed values.
    let h_rms = (h_sq_err / nv).sqrt();
    let k_rms = (k_sq_err / nv).sqrt();
    assert!(h_rms < 5e-3, "mean curvature RMS relative error {h_rms}");
    assert!(k_rms < 1e-2, "gauss curvature RMS relative error {k_rms}");
    assert!(h_max < 5e-2, "mean curvature max relative error {h_max}");
    assert!(k_max < 1e-1, "gauss curvature max relative error {k_max}");
}

#[test]
fn discrete_integrals_match_the_quadrature() {
    let report = integrate_invariants(&ellipsoid(AXES[0], AXES[1], AXES[2], 4).unwrap()).unwrap();
    let area_ref = quadrature(AXES, |_, _, _| 1.0);
    let total_h_ref = quadrature(AXES, |x, y, z| mean_implicit(AXES, x, y, z));
    let willmore_ref = quadrature(AXES, |x, y, z| mean_implicit(AXES, x, y, z).powi(2));
    let rel = |got: f64, want: f64| (got - want).abs() / want;
    assert!(rel(report.area, area_ref) < 3e-3, "area {}", report.area);
    assert!(
        rel(report.total_mean_curvature, total_h_ref) < 3e-3,
        "∫H {} vs {total_h_ref}",
        report.total_mean_curvature
    );
    assert!(
        rel(report.total_mean_curvature_sq, willmore_ref) < 5e-3,
        "∫H² {} vs {willmore_ref}",
        report.total_mean_curvature_sq
    );
    // Willmore bound: ∫H² ≥ 4π with equality only for round spheres.
    assert!(willmore_ref > 4.0 * std::f64::consts::PI + 0.1);
    assert!(report.rigidity_deficit > 0.01);
}

#[test]
fn two_to_one_ellipsoid_deficit_matches_the_quadrature_reference() {
    // The prolate 2:1:1 spheroid is the canonical non-round test body for
    // the rigidity deficit: the quadrature provides an independent value
    // and the mesh must land on it.
    let axes = [2.0f64, 1.0, 1.0];
    let area = quadrature(axes, |_, _, _| 1.0);
    let total_h = quadrature(axes, |x, y, z| mean_implicit(axes, x, y, z));
    let willmore = quadrature(axes, |x, y, z| mean_implicit(axes, x, y, z).powi(2));
    let deficit_ref = (area * willmore).sqrt() - total_h.abs();
    // Observed reference: 0.87371.
    assert!(deficit_ref > 0.5, "reference deficit {deficit_ref}");
    let report = integrate_invariants(&ellipsoid(axes[0], axes[1], axes[2], 4).unwrap()).unwrap();
    let rel = (report.rigidity_deficit - deficit_ref).abs() / deficit_ref;
    // Observed: mesh 0.86772 vs quadrature 0.87371, 0.7% apart.
    assert!(
        rel < 2e-2,
        "mesh deficit {} vs quadrature {deficit_ref}",
        report.rigidity_deficit
    );
}
