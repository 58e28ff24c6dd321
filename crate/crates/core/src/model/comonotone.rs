use super::ScoreVector;

/// `(x_i - x_j)(y_i - y_j) ≥ 0` for every pair of criteria.
///
/// Vectors of different lengths are never comonotone.
pub fn is_comonotone(x: &ScoreVector, y: &ScoreVector) -> bool {
    comonotone_slices(x.scores(), y.scores())
}

/// Cosigned componentwise (`x_i y_i ≥ 0`) with comonotone absolute values.
pub fn is_bipolar_comonotone(x: &ScoreVector, y: &ScoreVector) -> bool {
    bipolar_comonotone_slices(x.scores(), y.scores())
}

pub(crate) fn comonotone_slices(x: &[f64], y: &[f64]) -> bool {
    if x.len() != y.len() {
        return false;
    }
    let n = x.len();
    (0..n).all(|i| (i + 1..n).all(|j| (x[i] - x[j]) * (y[i] - y[j]) >= 0.0))
}

pub(crate) fn bipolar_comonotone_slices(x: &[f64], y: &[f64]) -> bool {
    if x.len() != y.len() {
        return false;
    }
    if x.iter().zip(y).any(|(a, b)| a * b < 0.0) {
        return false;
    }
    let n = x.len();
    (0..n).all(|i| (i + 1..n).all(|j| (x[i].abs() - x[j].abs()) * (y[i].abs() - y[j].abs()) >= 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(v: &[f64]) -> ScoreVector {
        ScoreVector::real(v.to_vec()).unwrap()
    }

    #[test]
    fn comonotone_examples() {
        assert!(is_comonotone(
            &real(&[1.0, 2.0, 3.0]),
            &real(&[0.0, 0.0, 5.0])
        ));
        assert!(!is_comonotone(&real(&[1.0, 2.0]), &real(&[2.0, 1.0])));
        assert!(is_comonotone(
            &real(&[3.0, -1.0, 7.0]),
            &real(&[4.0, 4.0, 4.0])
        ));
        assert!(!is_comonotone(&real(&[1.0]), &real(&[1.0, 2.0])));
    }

    #[test]
    fn bipolar_comonotone_examples() {
        let x = real(&[7.0, -7.0, 0.0, 0.0]);
        let y = real(&[5.0, -5.0, 5.0, 0.0]);
        let w = real(&[3.0, -3.0, 3.0, -3.0]);
        let z = real(&[2.0, -2.0, 2.0, -2.0]);
        let family = [&x, &y, &w, &z];
        for a in family {
            for b in family {
                assert!(is_bipolar_comonotone(a, b));
            }
        }
        assert!(!is_bipolar_comonotone(
            &real(&[1.0, 0.0]),
            &real(&[-1.0, 0.0])
        ));
    }
}
