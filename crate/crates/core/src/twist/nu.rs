use crate::error::{Error, Result};

/// `ν(a) = min { max_i |x_i| : x ∈ Z^s \ {0}, a·x = 0 }` by exhaustive search.
///
/// The search radius is bounded: `(a_2, -a_1, 0, …)` or a unit vector on a
/// zero entry always solves the equation.
pub fn nu(a: &[i64]) -> Result<u64> {
    match a.len() {
        0 => return Err(Error::Undefined("ν of an empty vector".into())),
        1 if a[0] != 0 => return Err(Error::Undefined("ν(a) for a single nonzero entry".into())),
        _ => {}
    }
    if a.contains(&0) {
        return Ok(1);
    }
    let bound = a[0].unsigned_abs().max(a[1].unsigned_abs()) as i64;
    for r in 1..=bound {
        if has_solution_with_radius(a, r) {
            return Ok(r as u64);
        }
    }
    Ok(bound as u64)
}

/// Is there a nonzero `x` with `max |x_i| <= r` and `a·x = 0`?
fn has_solution_with_radius(a: &[i64], r: i64) -> bool {
    let s = a.len();
    let mut x = vec![-r; s];
    loop {
        if x.iter().any(|&v| v != 0)
            && a.iter()
                .zip(&x)
                .map(|(p, q)| (*p as i128) * (*q as i128))
                .sum::<i128>()
                == 0
        {
            return true;
        }
        let mut k = 0;
        loop {
            if k == s {
                return false;
            }
            if x[k] < r {
                x[k] += 1;
                break;
            }
            x[k] = -r;
            k += 1;
        }
    }
}
