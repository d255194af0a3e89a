use super::{lift, Mat3, ProjMat, ProjectiveError};
use crate::Point;

const GENERAL_POSITION_TOL: f64 = 1e-10;

/// The unique projective map sending each source point to its target.
///
/// Both quadruples must be in general position (no three collinear). Each
/// quadruple is sent to the projective frame `e₁, e₂, e₃, e₁+e₂+e₃`, and the
/// result is the composite of one frame map with the inverse of the other.
pub fn projective_from_correspondences(
    pairs: &[(Point, Point); 4],
) -> Result<ProjMat, ProjectiveError> {
    let src = pairs.map(|(s, _)| s);
    let dst = pairs.map(|(_, t)| t);
    let from_frame_src = frame_matrix(&src)?;
    let from_frame_dst = frame_matrix(&dst)?;
    let inv = from_frame_src
        .try_inverse()
        .ok_or(ProjectiveError::DegenerateConfiguration([0, 1, 2]))?;
    ProjMat::new(from_frame_dst * inv)
}

/// Matrix sending the standard frame to the four points.
fn frame_matrix(pts: &[Point; 4]) -> Result<Mat3, ProjectiveError> {
    check_general_position(pts)?;
    let m = Mat3::from_columns(&[lift(pts[0]), lift(pts[1]), lift(pts[2])]);
    let weights = m
        .try_inverse()
        .ok_or(ProjectiveError::DegenerateConfiguration([0, 1, 2]))?
        * lift(pts[3]);
    Ok(Mat3::from_columns(&[
        m.column(0) * weights.x,
        m.column(1) * weights.y,
        m.column(2) * weights.z,
    ]))
}

fn check_general_position(pts: &[Point; 4]) -> Result<(), ProjectiveError> {
    let scale = pts
        .iter()
        .fold(0.0_f64, |acc, p| acc.max(p.x.abs()).max(p.y.abs()));
    if !scale.is_finite() {
        return Err(ProjectiveError::NonFinite);
    }
    for triple in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
        let m = Mat3::from_columns(&triple.map(|i| lift(pts[i])));
        if !(m.determinant().abs() > GENERAL_POSITION_TOL * scale * scale) {
            return Err(ProjectiveError::DegenerateConfiguration(triple));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;

    fn square() -> [Point; 4] {
        [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)].map(|(x, y)| Point::new(x, y))
    }

    #[test]
    fn identity_pairs() {
        let pairs = square().map(|p| (p, p));
        assert_eq!(
            projective_from_correspondences(&pairs).unwrap(),
            ProjMat::identity()
        );
    }

    #[test]
    fn recovers_affine_map() {
        let f = |p: Point| Point::new(2.0 * p.x + 1.0, p.y - 3.0);
        let pairs = square().map(|p| (p, f(p)));
        let h = projective_from_correspondences(&pairs).unwrap();
        let want = ProjMat::new(Mat3::new(2.0, 0.0, 1.0, 0.0, 1.0, -3.0, 0.0, 0.0, 1.0)).unwrap();
        assert!(h.distance(&want) <= 1e-10);
    }

    #[test]
    fn random_projective_maps_held_out_point() {
        let mut rng = sampling::rng(11);
        let mut checked = 0;
        while checked < 200 {
            let mut m = Mat3::from_fn(|_, _| sampling::uniform(&mut rng, -1.0, 1.0));
            m += Mat3::identity() * 2.0;
            if m.determinant() <= 0.0 {
                continue;
            }
            let truth = ProjMat::new(m).unwrap();
            let pts: Vec<Point> = (0..5)
                .map(|_| {
                    Point::new(
                        sampling::uniform(&mut rng, -1.0, 1.0),
                        sampling::uniform(&mut rng, -1.0, 1.0),
                    )
                })
                .collect();
            let imgs: Option<Vec<Point>> = pts.iter().map(|p| truth.apply(*p)).collect();
            let Some(imgs) = imgs else { continue };
            let pairs = [0, 1, 2, 3].map(|i| (pts[i], imgs[i]));
            let Ok(h) = projective_from_correspondences(&pairs) else {
                continue;
            };
            for (p, q) in pairs {
                assert!((h.apply(p).unwrap() - q).norm() <= 1e-8);
            }
            let held = h.apply(pts[4]).unwrap();
            let scale = imgs[4].coords.norm().max(1.0);
            assert!((held - imgs[4]).norm() <= 1e-8 * scale);
            checked += 1;
        }
    }

    #[test]
    fn rejects_collinear_sources() {
        let mut pts = square();
        pts[2] = Point::new(2.0, 0.0);
        let pairs = pts.map(|p| (p, p));
        assert_eq!(
            projective_from_correspondences(&pairs).unwrap_err(),
            ProjectiveError::DegenerateConfiguration([0, 1, 2])
        );
    }
}
