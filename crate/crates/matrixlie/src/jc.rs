use exactlin::{min_poly, squarefree_part, DenseMatrix};

use crate::MatrixLieError;

/// `X = X_s + X_n` with `X_s` semisimple, `X_n` nilpotent and `[X_s, X_n] = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JCDecomposition {
    pub semisimple: DenseMatrix,
    pub nilpotent: DenseMatrix,
}

/// Whether the minimal polynomial of `x` is square-free.
pub fn is_semisimple(x: &DenseMatrix) -> Result<bool, MatrixLieError> {
    let p = min_poly(x)?;
    Ok(squarefree_part(&p) == p)
}

/// Jordan–Chevalley decomposition by Newton iteration on the square-free
/// part `s` of the minimal polynomial: `Y ← Y − s(Y)·s′(Y)⁻¹`, starting at
/// `Y = X`. The result is verified before it is returned.
pub fn jordan_chevalley(x: &DenseMatrix) -> Result<JCDecomposition, MatrixLieError> {
    let p = min_poly(x)?;
    let s = squarefree_part(&p);
    let ds = s.derivative();
    let mut y = x.clone();
    let n = x.rows();
    for _ in 0..=usize::BITS as usize {
        let sy = s.eval_matrix(&y);
        if sy.is_zero() {
            break;
        }
        let inv = ds
            .eval_matrix(&y)
            .inverse()
            .ok_or_else(|| MatrixLieError::Verification("s′(Y) is singular during Newton iteration".into()))?;
        y = y.sub(&sy.mul(&inv));
    }
    let nil = x.sub(&y);
    let jc = JCDecomposition { semisimple: y, nilpotent: nil };
    if !s.eval_matrix(&jc.semisimple).is_zero() {
        return Err(MatrixLieError::Verification("Newton iteration did not converge".into()));
    }
    if !jc.semisimple.bracket(&jc.nilpotent).is_zero() {
        return Err(MatrixLieError::Verification("parts do not commute".into()));
    }
    if !jc.nilpotent.pow(n as u32).is_zero() {
        return Err(MatrixLieError::Verification("nilpotent part is not nilpotent".into()));
    }
    if !is_semisimple(&jc.semisimple)? {
        return Err(MatrixLieError::Verification("semisimple part has a repeated factor".into()));
    }
    Ok(jc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let x = DenseMatrix::from_ints(&[&[1, 1], &[0, 1]]);
        let jc = jordan_chevalley(&x).unwrap();
        assert_eq!(jc.semisimple, DenseMatrix::identity(2));
        assert_eq!(jc.nilpotent, DenseMatrix::unit(2, 0, 1));
        let d = DenseMatrix::from_ints(&[&[2, 0], &[0, -3]]);
        assert_eq!(jordan_chevalley(&d).unwrap().nilpotent, DenseMatrix::zeros(2, 2));
        let u = DenseMatrix::from_ints(&[&[0, 1, 5], &[0, 0, 2], &[0, 0, 0]]);
        let jc = jordan_chevalley(&u).unwrap();
        assert!(jc.semisimple.is_zero());
        assert_eq!(jc.nilpotent, u);
        let m = DenseMatrix::from_ints(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 3]]);
        let jc = jordan_chevalley(&m).unwrap();
        assert_eq!(jc.semisimple, DenseMatrix::from_ints(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]));
    }
}
