use super::{Aggregator, AxiomError};
use crate::model::{indicator_values, BiCapacity, Capacity, Coalition, Interval, SignedCoalition};

/// Read a capacity off the values of `g` on indicators.
///
/// On a scale containing `[0, 1]` this is `A ↦ g(1_A)`; on a nonpositive
/// scale containing `[-1, 0]` it is `A ↦ -g(-1_A)`.
pub fn elicit_capacity(g: &Aggregator) -> Result<Capacity, AxiomError> {
    let scale = g.scale();
    let sign = if scale.contains(0.0) && scale.contains(1.0) {
        1.0
    } else if scale.upper() <= 0.0 && scale.contains(0.0) && scale.contains(-1.0) {
        -1.0
    } else {
        return Err(AxiomError::UnsupportedScale(scale));
    };
    let n = g.n();
    let table = Coalition::all(n)
        .map(|a| {
            let x: Vec<f64> = (1..=n)
                .map(|i| if a.contains(i) { sign } else { 0.0 })
                .collect();
            // 0.0 + v turns a negative zero into a positive one
            0.0 + sign * g.eval_raw(&x)
        })
        .collect();
    Capacity::from_table(n, table).map_err(AxiomError::Elicitation)
}

/// Read a bi-capacity off the values of `g` on signed indicators: `(A, B) ↦ g(1_(A,B))`.
pub fn elicit_bicapacity(g: &Aggregator) -> Result<BiCapacity, AxiomError> {
    if g.scale() != Interval::bipolar() {
        return Err(AxiomError::UnsupportedScale(g.scale()));
    }
    let n = g.n();
    let table = SignedCoalition::all(n)
        .map(|p| 0.0 + g.eval_raw(&indicator_values(p, n)))
        .collect();
    BiCapacity::from_table(n, table).map_err(AxiomError::Elicitation)
}
