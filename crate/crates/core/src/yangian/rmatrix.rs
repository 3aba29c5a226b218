//! Yang's rational R-matrix `R_Y(u) = 1 − P/u`.

use crate::linalg::Matrix;
use crate::rep::flip;
use crate::scalar::Scalar;

pub fn yang_r(u: &Scalar) -> Matrix {
    Matrix::identity(4).sub(&flip(2, 2).scale(&u.inv()))
}

/// `R¹²(u₁−u₂)R¹³(u₁−u₃)R²³(u₂−u₃) = R²³R¹³R¹²` over `ℚ(u₁, u₂, u₃)`.
pub fn yang_qybe_check() -> bool {
    let (u1, u2, u3) = (Scalar::var("u1"), Scalar::var("u2"), Scalar::var("u3"));
    let i2 = Matrix::identity(2);
    let p23 = i2.kron(&flip(2, 2));
    let r12 = yang_r(&(&u1 - &u2)).kron(&i2);
    let r13 = p23.mul(&yang_r(&(&u1 - &u3)).kron(&i2)).mul(&p23);
    let r23 = i2.kron(&yang_r(&(&u2 - &u3)));
    r12.mul(&r13).mul(&r23) == r23.mul(&r13).mul(&r12)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_and_normalization() {
        let u = Scalar::var("u");
        let r = yang_r(&u);
        // u/(u−1)·R_Y(u) is the displayed rational limit
        let n = r.scale(&(&u / &(&u - &Scalar::one())));
        let p = |s: &str| Scalar::parse(s).unwrap();
        assert!(n[(0, 0)].is_one() && n[(3, 3)].is_one());
        assert_eq!(n[(1, 1)], p("u/(u-1)"));
        assert_eq!(n[(1, 2)], p("-1/(u-1)"));
        assert_eq!(n[(2, 1)], n[(1, 2)]);
        assert_eq!(n[(2, 2)], n[(1, 1)]);
        assert!(yang_qybe_check());
        // leading term at u = ∞ is the identity: R_Y(u) − 1 = −P/u
        assert_eq!(r.sub(&Matrix::identity(4)).scale(&u), flip(2, 2).neg());
    }
}
