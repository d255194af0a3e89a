use curvelines::actions::{build_phi, ActionCase};
use curvelines::curves::{
    self, default_range, line_image_translate, map_point, map_point_inverse, phi_line_image,
    sample_line_image, sample_lines, verify_translate, CurveError, CurveFamily, Line, MapId,
};
use curvelines::{sampling, Point};
use proptest::prelude::*;
use proptest::test_runner::FileFailurePersistence;

fn map_id() -> impl Strategy<Value = MapId> {
    prop::sample::select(MapId::ALL.to_vec())
}

/// A parameter inside the default sampling range of `line`.
fn param(id: MapId, line: Line, frac: f64) -> f64 {
    let (lo, hi) = default_range(id, line);
    lo + (hi - lo) * frac
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: Some(Box::new(FileFailurePersistence::WithSource("regressions"))),
        ..ProptestConfig::default()
    })]

    #[test]
    fn translate_property(id in map_id(), seed in any::<u64>()) {
        let line = sample_lines(id, &mut sampling::rng(seed), 1)[0];
        let r = verify_translate(id, line, 100, 1e-9);
        prop_assert!(r.is_ok(), "{id} {line:?}: {r:?}");
    }

    /// The translate is pinned down by any two of its points.
    #[test]
    fn offset_is_unique(id in map_id(), seed in any::<u64>(), f1 in 0.0..1.0f64, f2 in 0.0..1.0f64) {
        prop_assume!((f1 - f2).abs() > 0.05);
        let line = sample_lines(id, &mut sampling::rng(seed), 1)[0];
        let c = line_image_translate(id, line).unwrap();
        let p1 = map_point(id, line.at(param(id, line, f1))).unwrap();
        let p2 = map_point(id, line.at(param(id, line, f2))).unwrap();
        let fitted = c.family.fit_offset(p1, p2).expect("two distinct samples");
        let shift = c.shift();
        prop_assert!((fitted.x - shift.x).abs() <= 1e-8, "{fitted:?} vs {shift:?}");
        let dv = if c.family == CurveFamily::ComplexLogCurve {
            // v is only defined modulo 2π
            let d = (fitted.y - shift.y).rem_euclid(2.0 * std::f64::consts::PI);
            d.min(2.0 * std::f64::consts::PI - d)
        } else {
            (fitted.y - shift.y).abs()
        };
        prop_assert!(dv <= 1e-8, "{fitted:?} vs {shift:?}");
    }

    #[test]
    fn inverse_round_trip(id in map_id(), x in 0.01..5.0f64, y in 0.01..5.0f64, flip_x in any::<bool>(), flip_y in any::<bool>()) {
        let mut p = Point::new(if flip_x { -x } else { x }, if flip_y { -y } else { y });
        if map_point(id, p).is_err() {
            p = Point::new(x, y);
        }
        let q = map_point(id, p).unwrap();
        let back = map_point_inverse(id, q).unwrap();
        prop_assert!((back - p).norm() <= 1e-10 * (1.0 + p.coords.norm()));
    }

    /// Points of a complex-log line image satisfy the base-curve equation
    /// after removing the offset and branch shift.
    #[test]
    fn complex_log_base_curve(a in -3.0..3.0f64, b in -3.0..3.0f64, t in -5.0..5.0f64) {
        prop_assume!((a + b).abs() > 0.05 && (t - 1.0).abs() > 1e-3);
        let c = line_image_translate(MapId::ComplexLog, Line::new(a, b)).unwrap();
        let q = map_point(MapId::ComplexLog, Line::new(a, b).at(t)).unwrap() - c.shift();
        prop_assert!((q.x.exp() * q.y.sin() - 1.0).abs() <= 1e-9);
    }
}

/// Incident pairs stay incident; non-incident pairs stay clearly off.
#[test]
fn incidence_preservation() {
    let mut rng = sampling::rng(99);
    for id in MapId::ALL {
        let lines = sample_lines(id, &mut rng, 1000);
        let mut min_off = f64::INFINITY;
        for (k, &line) in lines.iter().enumerate() {
            let c = line_image_translate(id, line).unwrap();
            let t = param(id, line, sampling::uniform(&mut rng, 0.0, 1.0));
            let on = line.at(t);
            let r = c.residual(map_point(id, on).unwrap()).abs();
            assert!(r <= 1e-9, "{id} line #{k}: incident residual {r:e}");

            // move off the line vertically, staying in the domain
            let dy = sampling::uniform(&mut rng, 0.05, 1.0);
            let off = Point::new(on.x, on.y + dy);
            let r = c.residual(map_point(id, off).unwrap()).abs();
            assert!(r > 1e-9, "{id} line #{k}: non-incident residual {r:e}");
            min_off = min_off.min(r);
        }
        eprintln!("{id}: smallest non-incident residual {min_off:e}");
    }
}

#[test]
fn sampled_points_follow_parameters() {
    let line = Line::new(0.5, 2.0);
    for id in MapId::ALL {
        let (lo, hi) = default_range(id, line);
        let pts = sample_line_image(id, line, (lo, hi), 11).unwrap();
        assert_eq!(pts.len(), 11);
        assert_eq!(pts[0], map_point(id, line.at(lo)).unwrap());
        assert_eq!(pts[10], map_point(id, line.at(hi)).unwrap());
    }
}

/// The φ of each action sends lines onto translates of the same base curves.
#[test]
fn action_phi_images_use_the_same_curves() {
    let mut rng = sampling::rng(3);
    let cases = [
        (ActionCase::A1, CurveFamily::SoftplusNegCurve),
        (ActionCase::A2, CurveFamily::NegExpCurve),
        (ActionCase::A3Rotation, CurveFamily::ComplexLogCurve),
        (ActionCase::A4Parabola, CurveFamily::Parabola(-0.5)),
        (ActionCase::A6Log, CurveFamily::LogCurve),
    ];
    for (case, family) in cases {
        let phi = build_phi(case);
        let mut checked = 0;
        while checked < 200 {
            let (a, b) = (
                sampling::uniform(&mut rng, -3.0, 3.0),
                sampling::uniform(&mut rng, -3.0, 3.0),
            );
            let line = Line::new(a, b);
            let Ok(img) = phi_line_image(case, line) else {
                continue;
            };
            assert_eq!(img.translate.family, family);
            for _ in 0..20 {
                let p = line.at(sampling::uniform(&mut rng, -0.95, 5.0));
                let Ok(q) = phi.forward(p) else { continue };
                let r = img.residual(q).abs();
                assert!(r <= 1e-9, "{case} {line:?} at {p:?}: {r:e}");
            }
            checked += 1;
        }
    }
    assert!(matches!(
        phi_line_image(ActionCase::A5Identity, Line::new(1.0, 1.0)),
        Err(CurveError::NoCurveFamily(ActionCase::A5Identity))
    ));
}

#[test]
fn every_map_has_its_family() {
    for id in MapId::ALL {
        let line = sample_lines(id, &mut sampling::rng(1), 1)[0];
        assert_eq!(
            curves::line_image_translate(id, line).unwrap().family,
            id.family()
        );
    }
}
