use crate::error::{Error, Result};
use crate::model::RankVector;

/// Spearman's rank correlation between two rankings of the same alternatives.
///
/// Tied alternatives receive average ranks and the coefficient is the
/// Pearson correlation of the two fractional rank vectors, which reduces to
/// `1 - 6 sum d^2 / (m (m^2 - 1))` without ties.
pub fn spearman(a: &RankVector, b: &RankVector) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let x = a.average_ranks();
    let y = b.average_ranks();
    let m = x.len() as f64;
    let mean_x = x.iter().sum::<f64>() / m;
    let mean_y = y.iter().sum::<f64>() / m;

    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (xi, yi) in x.iter().zip(&y) {
        let dx = xi - mean_x;
        let dy = yi - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::ZeroVariance);
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}
