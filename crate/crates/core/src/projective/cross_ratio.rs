use super::ProjectiveError;
use crate::exec::{self, Exec};
use crate::{Point, Vector2};

/// Cross-ratio `(a, b; c, d) = ((c - a)(d - b)) / ((d - a)(c - b))` of four
/// affine parameters on a line.
///
/// With this convention `(a, b; c, d) + (a, c; b, d) = 1`, the value is 0
/// when `a = c` or `d = b`, and harmonic quadruples give -1.
pub fn cross_ratio(a: f64, b: f64, c: f64, d: f64) -> Result<f64, ProjectiveError> {
    let scale = a.abs().max(b.abs()).max(c.abs()).max(d.abs());
    let den_da = d - a;
    let den_cb = c - b;
    if den_da.abs() <= 1e-12 * scale || den_cb.abs() <= 1e-12 * scale {
        return Err(ProjectiveError::DegenerateQuad);
    }
    Ok(((c - a) * (d - b)) / (den_da * den_cb))
}

/// Four points on a common line together with their affine parameters
/// along it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollinearQuad {
    points: [Point; 4],
    params: [f64; 4],
}

impl CollinearQuad {
    /// Perpendicular distance allowed by [`CollinearQuad::from_points`].
    pub const DEFAULT_TOL: f64 = 1e-9;

    pub fn from_points(points: [Point; 4]) -> Result<Self, ProjectiveError> {
        Self::from_points_with_tol(points, Self::DEFAULT_TOL)
    }

    /// Parametrizes the points along the line through the farthest pair,
    /// measured from `points[0]` with a unit direction.
    pub fn from_points_with_tol(points: [Point; 4], tol: f64) -> Result<Self, ProjectiveError> {
        let mut best = (0, 0, 0.0);
        for i in 0..4 {
            for j in i + 1..4 {
                let d = (points[j] - points[i]).norm();
                if d > best.2 {
                    best = (i, j, d);
                }
            }
        }
        let (i, j, len) = best;
        if !(len > 0.0) {
            return Err(ProjectiveError::DegenerateQuad);
        }
        let dir = (points[j] - points[i]) / len;
        let distance = points
            .iter()
            .map(|p| perp(dir, *p - points[i]).abs())
            .fold(0.0, f64::max);
        if !(distance <= tol) {
            return Err(ProjectiveError::NonCollinear { distance, tol });
        }
        let params = points.map(|p| dir.dot(&(p - points[0])));
        Ok(CollinearQuad { points, params })
    }

    /// Builds the quad `origin + t·direction` for the given parameters.
    pub fn on_line(origin: Point, direction: Vector2<f64>, params: [f64; 4]) -> Self {
        CollinearQuad {
            points: params.map(|t| origin + direction * t),
            params,
        }
    }

    pub fn points(&self) -> &[Point; 4] {
        &self.points
    }

    pub fn params(&self) -> &[f64; 4] {
        &self.params
    }
}

fn perp(u: Vector2<f64>, v: Vector2<f64>) -> f64 {
    u.x * v.y - u.y * v.x
}

pub fn cross_ratio_points(quad: &CollinearQuad) -> Result<f64, ProjectiveError> {
    let [a, b, c, d] = quad.params;
    cross_ratio(a, b, c, d)
}

/// Largest cross-ratio change `|λ(images) - λ(sources)|` over `quads`.
///
/// Every image quad must be collinear within `tol`; otherwise the map does
/// not send that segment into a segment and an error is returned.
pub fn verify_cross_ratio_preservation<F>(
    map: F,
    quads: &[CollinearQuad],
    tol: f64,
) -> Result<f64, ProjectiveError>
where
    F: Fn(Point) -> Option<Point> + Sync + Send,
{
    let indexed: Vec<(usize, &CollinearQuad)> = quads.iter().enumerate().collect();
    exec::try_max_f64(Exec::default(), &indexed, |&(qi, quad)| {
        let mut images = [Point::origin(); 4];
        for (pi, p) in quad.points.iter().enumerate() {
            images[pi] = map(*p).ok_or(ProjectiveError::MapUndefined {
                quad: qi,
                point: pi,
            })?;
        }
        let image = CollinearQuad::from_points_with_tol(images, tol)?;
        // Same parametrization path on both sides, so the identity map gives 0.
        let source = CollinearQuad::from_points_with_tol(quad.points, f64::INFINITY)?;
        Ok((cross_ratio_points(&image)? - cross_ratio_points(&source)?).abs())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;
    use approx::assert_abs_diff_eq;

    #[test]
    fn worked_values() {
        assert_abs_diff_eq!(
            cross_ratio(0.0, 1.0, 2.0, 3.0).unwrap(),
            4.0 / 3.0,
            epsilon = 1e-15
        );
        assert_eq!(cross_ratio(0.0, 1.0, 0.0, 3.0).unwrap(), 0.0);
        assert_eq!(cross_ratio(0.0, 2.0, 3.0, 1.5).unwrap(), -1.0);
    }

    #[test]
    fn zero_cases_are_exact() {
        assert_eq!(cross_ratio(1.5, -2.0, 1.5, 7.0).unwrap(), 0.0);
        assert_eq!(cross_ratio(1.5, -2.0, 4.0, -2.0).unwrap(), 0.0);
    }

    #[test]
    fn degenerate_denominators() {
        assert_eq!(
            cross_ratio(1.0, 2.0, 3.0, 1.0),
            Err(ProjectiveError::DegenerateQuad)
        );
        assert_eq!(
            cross_ratio(1.0, 2.0, 2.0, 5.0),
            Err(ProjectiveError::DegenerateQuad)
        );
    }

    #[test]
    fn point_level_examples() {
        let diag = [0.0, 1.0, 2.0, 3.0].map(|t| Point::new(t, t));
        let q = CollinearQuad::from_points(diag).unwrap();
        assert_abs_diff_eq!(cross_ratio_points(&q).unwrap(), 4.0 / 3.0, epsilon = 1e-14);

        let vertical = [0.0, 2.0, 3.0, 1.5].map(|y| Point::new(5.0, y));
        let q = CollinearQuad::from_points(vertical).unwrap();
        assert_abs_diff_eq!(cross_ratio_points(&q).unwrap(), -1.0, epsilon = 1e-14);

        let repeated = [
            Point::new(1.0, 1.0),
            Point::new(3.0, 2.0),
            Point::new(1.0, 1.0),
            Point::new(5.0, 3.0),
        ];
        let q = CollinearQuad::from_points(repeated).unwrap();
        assert_eq!(cross_ratio_points(&q).unwrap(), 0.0);
    }

    #[test]
    fn rejects_non_collinear() {
        let pts = [(0.0, 0.0), (1.0, 0.0), (2.0, 1e-6), (3.0, 0.0)].map(|(x, y)| Point::new(x, y));
        assert!(matches!(
            CollinearQuad::from_points(pts),
            Err(ProjectiveError::NonCollinear { .. })
        ));
        let same = [Point::new(1.0, 1.0); 4];
        assert_eq!(
            CollinearQuad::from_points(same),
            Err(ProjectiveError::DegenerateQuad)
        );
    }

    #[test]
    fn reparametrization_invariance() {
        let params = [0.3, -1.2, 2.5, 4.0];
        let q1 = CollinearQuad::on_line(Point::new(1.0, 2.0), Vector2::new(3.0, -1.0), params);
        let q2 = CollinearQuad::from_points(*q1.points()).unwrap();
        let direct = cross_ratio(params[0], params[1], params[2], params[3]).unwrap();
        assert_abs_diff_eq!(cross_ratio_points(&q2).unwrap(), direct, epsilon = 1e-12);
    }

    #[test]
    fn multiplicativity_through_auxiliary_point() {
        // (a,b;e,c) = λ and (a,b;e,d) = μ give (a,b;c,d) = μ/λ.
        let mut rng = sampling::rng(7);
        for _ in 0..200 {
            let a = sampling::uniform(&mut rng, -3.0, -1.0);
            let b = sampling::uniform(&mut rng, 1.0, 3.0);
            let e = sampling::uniform(&mut rng, -0.5, 0.5);
            let c = sampling::uniform(&mut rng, 4.0, 6.0);
            let d = sampling::uniform(&mut rng, -0.9, 0.9);
            let lambda = cross_ratio(a, b, e, c).unwrap();
            let mu = cross_ratio(a, b, e, d).unwrap();
            let direct = cross_ratio(a, b, c, d).unwrap();
            assert!((mu / lambda - direct).abs() <= 1e-10 * direct.abs().max(1.0));
        }
    }

    #[test]
    fn preservation_identity_and_cubic() {
        let quads = vec![
            CollinearQuad::on_line(
                Point::new(0.0, 0.0),
                Vector2::new(1.0, 1.0),
                [0.0, 1.0, 2.0, 3.0],
            ),
            CollinearQuad::on_line(
                Point::new(2.0, -1.0),
                Vector2::new(0.5, 2.0),
                [-1.0, 0.5, 2.0, 7.0],
            ),
        ];
        assert_eq!(
            verify_cross_ratio_preservation(Some, &quads, 1e-9).unwrap(),
            0.0
        );

        // (x, y) ↦ (x, y³) keeps vertical lines but distorts their cross-ratios.
        let vertical = [CollinearQuad::on_line(
            Point::new(0.7, 0.0),
            Vector2::new(0.0, 1.0),
            [0.0, 1.0, 2.0, 3.0],
        )];
        let cube = |p: Point| Some(Point::new(p.x, p.y.powi(3)));
        let r = verify_cross_ratio_preservation(cube, &vertical, 1e-9).unwrap();
        assert!(r > 0.1, "residual {r}");
        // 208/189 versus 4/3
        assert_abs_diff_eq!(r, 4.0 / 3.0 - 208.0 / 189.0, epsilon = 1e-12);

        let diagonal = [quads[0]];
        assert!(matches!(
            verify_cross_ratio_preservation(cube, &diagonal, 1e-9),
            Err(ProjectiveError::NonCollinear { .. })
        ));
    }

    #[test]
    fn undefined_map_is_reported() {
        let q = [CollinearQuad::on_line(
            Point::origin(),
            Vector2::new(1.0, 0.0),
            [0.0, 1.0, 2.0, 3.0],
        )];
        let err = verify_cross_ratio_preservation(|p: Point| (p.x < 1.5).then_some(p), &q, 1e-9);
        assert_eq!(
            err,
            Err(ProjectiveError::MapUndefined { quad: 0, point: 2 })
        );
    }
}
