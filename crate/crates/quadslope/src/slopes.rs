//! Deciding whether four slopes are good, two independent ways.
//!
//! A set of slopes is good when every cubic graph can be drawn with it.
//! For four slopes this is equivalent to being an affine image of the four
//! basic slopes, and to admitting a drawing of the complete graph on four
//! vertices. Both deciders are implemented and must agree; a disagreement
//! is reported as an error, never as an answer.
//!
//! Slopes live on the projective line as homogeneous rational pairs, so the
//! affine-image test is a cross-ratio computation: a quadruple is an image
//! of the basic slopes exactly when some ordering reproduces their
//! cross-ratio. The drawing test solves the parallelogram equations: two
//! slopes serve as doubled side directions, the remaining two as diagonals.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::drawer::Drawing;
use crate::geometry::{basic_slopes, AffineMap, Point, Rat, Slope, SlopeSet, SymScalar};
use crate::pipeline::verify_drawing;
use crate::samples;

/// Errors from the four-slope deciders.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SlopeSetError {
    #[error("need exactly four distinct slopes, got {0}")]
    NeedFourSlopes(usize),
    #[error("deciders disagree on {set}: affine-image {affine}, K4-drawable {k4}")]
    DeciderDisagreement {
        set: String,
        affine: bool,
        k4: bool,
    },
}

fn four(set: &SlopeSet) -> Result<[&Slope; 4], SlopeSetError> {
    let s = set.as_slice();
    if s.len() != 4 {
        return Err(SlopeSetError::NeedFourSlopes(s.len()));
    }
    Ok([&s[0], &s[1], &s[2], &s[3]])
}

/// `dy_i * dx_j - dy_j * dx_i`, the projective determinant of two slopes.
fn det(a: &Slope, b: &Slope) -> BigInt {
    let (adx, ady) = a.direction();
    let (bdx, bdy) = b.direction();
    ady * bdx - bdy * adx
}

/// Cross-ratio of the basic slopes in the reference order `(0, 1, inf, -1)`.
/// Any image of the basic slopes reproduces it under some ordering.
fn basic_cross_ratio() -> (BigInt, BigInt) {
    (BigInt::from(2), BigInt::from(1))
}

/// Whether the quadruple `(p[0], p[1]; p[2], p[3])` has cross-ratio `num/den`.
fn has_cross_ratio(p: &[&Slope; 4], num: &BigInt, den: &BigInt) -> bool {
    let d13 = det(p[0], p[2]);
    let d24 = det(p[1], p[3]);
    let d14 = det(p[0], p[3]);
    let d23 = det(p[1], p[2]);
    // (d13 * d24) / (d14 * d23) == num / den, cross-multiplied; slopes are
    // pairwise distinct so no determinant vanishes.
    &d13 * &d24 * den == &d14 * &d23 * num
}

/// The Möbius matrix sending three distinct slopes to `0, 1, inf`.
/// Acts on homogeneous pairs `(dy, dx)`.
fn mobius_to_standard(p1: &Slope, p2: &Slope, p3: &Slope) -> [[BigInt; 2]; 2] {
    let (b1, a1) = {
        let (dx, dy) = p1.direction();
        (dx.clone(), dy.clone())
    };
    let (b3, a3) = {
        let (dx, dy) = p3.direction();
        (dx.clone(), dy.clone())
    };
    let d23 = det(p2, p3);
    let d21 = det(p2, p1);
    [
        [&b1 * &d23, -(&a1 * &d23)],
        [&b3 * &d21, -(&a3 * &d21)],
    ]
}

fn mobius_inverse(m: &[[BigInt; 2]; 2]) -> [[BigInt; 2]; 2] {
    [
        [m[1][1].clone(), -m[0][1].clone()],
        [-m[1][0].clone(), m[0][0].clone()],
    ]
}

fn mobius_compose(f: &[[BigInt; 2]; 2], g: &[[BigInt; 2]; 2]) -> [[BigInt; 2]; 2] {
    let mut out = [
        [BigInt::zero(), BigInt::zero()],
        [BigInt::zero(), BigInt::zero()],
    ];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = &f[i][0] * &g[0][j] + &f[i][1] * &g[1][j];
        }
    }
    out
}

/// Translates a Möbius matrix on slopes into the plane map inducing it.
///
/// The plane map `[[a, b], [c, d]]` sends slope `s` to `(c + d s)/(a + b s)`;
/// matching coefficients against the Möbius action gives the plane matrix
/// `[[delta, gamma], [beta, alpha]]`.
fn mobius_to_plane(m: &[[BigInt; 2]; 2]) -> Option<AffineMap> {
    let to_rat = |v: &BigInt| Rat::from_integer(v.clone());
    AffineMap::linear([
        [to_rat(&m[1][1]), to_rat(&m[1][0])],
        [to_rat(&m[0][1]), to_rat(&m[0][0])],
    ])
    .ok()
}

/// Decides whether the set is an affine image of the four basic slopes,
/// returning a witness plane map on success.
pub fn is_affine_image_of_basic(set: &SlopeSet) -> Result<Option<AffineMap>, SlopeSetError> {
    let slopes = four(set)?;
    let (num, den) = basic_cross_ratio();
    let basics = basic_slopes();

    let mut indices = [0usize, 1, 2, 3];
    let found = permutations(&mut indices, 0, &mut |perm| {
        let ordered = [
            slopes[perm[0]],
            slopes[perm[1]],
            slopes[perm[2]],
            slopes[perm[3]],
        ];
        if !has_cross_ratio(&ordered, &num, &den) {
            return None;
        }
        // Möbius map matching the first three points; the fourth follows
        // from the equal cross-ratios.
        let to_std_basic = mobius_to_standard(&basics[0], &basics[1], &basics[2]);
        let to_std_target = mobius_to_standard(ordered[0], ordered[1], ordered[2]);
        let witness = mobius_compose(&mobius_inverse(&to_std_target), &to_std_basic);
        let plane = mobius_to_plane(&witness)?;
        // Sanity: the witness must map the basic set onto the target set.
        let mut image: Vec<Slope> = basics.iter().map(|s| plane.map_slope(s)).collect();
        image.sort();
        if image == set.as_slice() {
            Some(plane)
        } else {
            None
        }
    });
    Ok(found)
}

fn permutations<T>(
    items: &mut [usize; 4],
    k: usize,
    visit: &mut impl FnMut(&[usize; 4]) -> Option<T>,
) -> Option<T> {
    if k == 4 {
        return visit(items);
    }
    for i in k..4 {
        items.swap(k, i);
        if let Some(found) = permutations(items, k + 1, visit) {
            items.swap(k, i);
            return Some(found);
        }
        items.swap(k, i);
    }
    None
}

/// Decides whether the complete graph on four vertices has a straight-line
/// drawing using only the given slopes, returning a verified drawing.
///
/// In any such drawing the points are in general position, two slopes each
/// cover two opposite sides of a parallelogram, and the remaining two are
/// its diagonals. All side/diagonal roles are enumerated; for each, the
/// second side's length is the unique rational solving the first diagonal's
/// slope equation, and the candidate survives only if the other diagonal
/// also matches and the full drawing verifies.
pub fn can_draw_k4(set: &SlopeSet) -> Result<Option<Drawing>, SlopeSetError> {
    let slopes = four(set)?;
    let k4 = samples::k4();

    for first in 0..4 {
        for second in first + 1..4 {
            let (a, b) = (slopes[first], slopes[second]);
            let rest: Vec<&Slope> = (0..4)
                .filter(|&i| i != first && i != second)
                .map(|i| slopes[i])
                .collect();
            for (c, d) in [(rest[0], rest[1]), (rest[1], rest[0])] {
                let Some(t) = parallelogram_scale(a, b, c) else {
                    continue;
                };
                if t.is_zero() {
                    continue;
                }
                // Vertices: origin, u, u + t v, t v with u along a, v along b.
                let (u_dx, u_dy) = a.direction();
                let (v_dx, v_dy) = b.direction();
                let u = (
                    Rat::from_integer(u_dx.clone()),
                    Rat::from_integer(u_dy.clone()),
                );
                let tv = (
                    Rat::from_integer(v_dx.clone()) * &t,
                    Rat::from_integer(v_dy.clone()) * &t,
                );
                let p2 = (&u.0 + &tv.0, &u.1 + &tv.1);
                // Second diagonal from u to t v must have slope d.
                let diag = (&tv.0 - &u.0, &tv.1 - &u.1);
                let matches_d = {
                    let (d_dx, d_dy) = d.direction();
                    &diag.0 * Rat::from_integer(d_dy.clone())
                        == &diag.1 * Rat::from_integer(d_dx.clone())
                };
                if !matches_d {
                    continue;
                }
                let pos = vec![
                    Point::new(SymScalar::zero(), SymScalar::zero()),
                    Point::new(SymScalar::from_rat(u.0), SymScalar::from_rat(u.1)),
                    Point::new(SymScalar::from_rat(p2.0), SymScalar::from_rat(p2.1)),
                    Point::new(SymScalar::from_rat(tv.0), SymScalar::from_rat(tv.1)),
                ];
                let drawing = Drawing::new(k4.clone(), pos, set.clone());
                if verify_drawing(&k4, &drawing, set).ok() {
                    return Ok(Some(drawing));
                }
            }
        }
    }
    Ok(None)
}

/// The scale `t` making the diagonal `u + t v` parallel to `c`, where `u`
/// and `v` are the canonical directions of slopes `a` and `b`.
fn parallelogram_scale(a: &Slope, b: &Slope, c: &Slope) -> Option<Rat> {
    let cross = |p: &Slope, q: &Slope| -> BigInt {
        let (p_dx, p_dy) = p.direction();
        let (q_dx, q_dy) = q.direction();
        p_dx * q_dy - p_dy * q_dx
    };
    let denom = cross(b, c);
    if denom.is_zero() {
        return None; // b == c cannot happen for distinct slopes
    }
    Some(Rat::new(-cross(a, c), denom))
}

/// Whether the set is good, asserting that both deciders agree.
pub fn is_good(set: &SlopeSet) -> Result<bool, SlopeSetError> {
    let affine = is_affine_image_of_basic(set)?.is_some();
    let k4 = can_draw_k4(set)?.is_some();
    if affine != k4 {
        return Err(SlopeSetError::DeciderDisagreement {
            set: set.to_string(),
            affine,
            k4,
        });
    }
    Ok(affine)
}
