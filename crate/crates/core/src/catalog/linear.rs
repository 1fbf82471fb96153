//! `GL_2(3)` and its subgroups acting on vectors of the plane over the
//! three-element field, plus the affine group built from its Sylow 2-subgroup.

use crate::perm::Permutation;

/// Row-major `[[a, b], [c, d]]` over `F_3`, acting on row vectors `v ↦ vM`.
pub(crate) type Mat = [u8; 4];

pub(crate) const IDENTITY: Mat = [1, 0, 0, 1];

pub(crate) fn mat_mul(m: &Mat, n: &Mat) -> Mat {
    let e = |i: usize, j: usize| (m[2 * i] * n[j] + m[2 * i + 1] * n[2 + j]) % 3;
    [e(0, 0), e(0, 1), e(1, 0), e(1, 1)]
}

pub(crate) fn det(m: &Mat) -> u8 {
    (m[0] * m[3] + 2 * (m[1] * m[2]) % 3) % 3
}

pub(crate) fn mat_order(m: &Mat) -> usize {
    let mut x = *m;
    let mut k = 1;
    while x != IDENTITY {
        x = mat_mul(&x, m);
        k += 1;
    }
    k
}

pub(crate) fn mat_pow(m: &Mat, e: usize) -> Mat {
    (0..e).fold(IDENTITY, |acc, _| mat_mul(&acc, m))
}

/// All 48 invertible matrices in lexicographic order of entries.
pub(crate) fn general_linear() -> Vec<Mat> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    let m = [a, b, c, d];
                    if det(&m) != 0 {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// Vector `(x, y)` has index `x + 3y`.
fn apply(v: usize, m: &Mat) -> usize {
    let (x, y) = (v % 3, v / 3);
    let nx = (x * m[0] as usize + y * m[2] as usize) % 3;
    let ny = (x * m[1] as usize + y * m[3] as usize) % 3;
    nx + 3 * ny
}

/// Action on the 8 non-zero vectors, labelled by index minus one.
pub(crate) fn on_nonzero_vectors(m: &Mat) -> Permutation {
    Permutation::from_images((1..9).map(|v| apply(v, m) - 1).collect()).expect("invertible")
}

/// Affine action `v ↦ vM + t` on all 9 vectors.
pub(crate) fn affine(m: &Mat, t: (usize, usize)) -> Permutation {
    Permutation::from_images(
        (0..9)
            .map(|v| {
                let w = apply(v, m);
                (w % 3 + t.0) % 3 + 3 * ((w / 3 + t.1) % 3)
            })
            .collect(),
    )
    .expect("bijection")
}

/// First `r` of order 8, then first involution `s` with `s r s = r^3`.
pub(crate) fn semidihedral_generators() -> (Mat, Mat) {
    let gl = general_linear();
    let r = *gl.iter().find(|m| mat_order(m) == 8).expect("GL_2(3) has elements of order 8");
    let r3 = mat_pow(&r, 3);
    let s = *gl
        .iter()
        .find(|s| mat_order(s) == 2 && mat_mul(&mat_mul(s, &r), s) == r3)
        .expect("semidihedral involution exists");
    (r, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_group_facts() {
        let gl = general_linear();
        assert_eq!(gl.len(), 48);
        assert_eq!(gl.iter().filter(|m| det(m) == 1).count(), 24);
        let (r, s) = semidihedral_generators();
        assert_eq!(mat_order(&r), 8);
        assert_eq!(mat_order(&s), 2);
        assert_eq!(mat_mul(&mat_mul(&s, &r), &s), mat_pow(&r, 3));
        let a = on_nonzero_vectors(&r);
        let b = on_nonzero_vectors(&s);
        assert_eq!(a.compose(&b).unwrap(), on_nonzero_vectors(&mat_mul(&r, &s)));
        assert_eq!(affine(&IDENTITY, (0, 0)), Permutation::identity(9));
    }
}
