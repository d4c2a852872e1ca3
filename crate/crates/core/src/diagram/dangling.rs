//! Elementary braiges `(1_m, (b, λ), F)` up to dangling, i.e. up to right
//! multiplication by labeled braids on the feet.

use std::collections::BTreeSet;

use super::{Flavor, Spraige};
use crate::error::{Error, Result};
use crate::labeled::LabelGroupSpec;

fn check_shape(x: &Spraige) -> Result<()> {
    if !x.minus().is_trivial() || !x.plus().is_elementary() {
        return Err(Error::Shape(format!(
            "expected (1_m, (b, λ), elementary forest), got {x}"
        )));
    }
    Ok(())
}

/// Whether `y = x · (1_n, (c, μ), 1_n)` for some labeled braid `(c, μ)`, with
/// `c` restricted to pure (flavor F) or cyclic (flavor T) braids.
///
/// `x⁻¹ · y` has that form exactly when its reduced representative has two
/// trivial forests, since a diagram with trivial forests admits no reduction.
pub fn dangling_equal(
    spec: &LabelGroupSpec,
    flavor: Flavor,
    x: &Spraige,
    y: &Spraige,
) -> Result<bool> {
    check_shape(x)?;
    check_shape(y)?;
    if x.heads() != y.heads() {
        return Err(Error::Shape(format!(
            "braiges start on {} and {} strands",
            x.heads(),
            y.heads()
        )));
    }
    if x.feet() != y.feet() {
        return Ok(false);
    }
    let z = x.invert().multiply(spec, y)?;
    if !z.minus().is_trivial() || !z.plus().is_trivial() {
        return Ok(false);
    }
    Ok(match flavor {
        Flavor::V => true,
        Flavor::F => z.braid().is_pure(),
        Flavor::T => z.braid().is_cyclic(),
    })
}

/// For each caret of the forest, the top positions of the strands ending in it.
pub fn arc_support(x: &Spraige) -> Result<Vec<BTreeSet<usize>>> {
    check_shape(x)?;
    let inv = x.braid().permutation().inverse();
    let d = x.arity();
    Ok(x.plus()
        .elementary_carets()
        .into_iter()
        .map(|p| (p..p + d).map(|q| inv.apply(q)).collect())
        .collect())
}
