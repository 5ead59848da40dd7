use crate::error::{Error, Result};

/// Gegenbauer polynomial `C_n^λ(y)` held in the monomial basis.
#[derive(Debug, Clone, PartialEq)]
pub struct GegenbauerPoly {
    degree: usize,
    lambda: f64,
    coeffs: Vec<f64>,
}

impl GegenbauerPoly {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Monomial coefficients, `coeffs()[k]` multiplies `y^k`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Horner evaluation of the monomial form.
    ///
    /// Fine for moderate degree; [`gegenbauer_eval`] is the stable route for
    /// high degree.
    pub fn eval_monomial(&self, y: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * y + c)
    }

    /// Value by the three-term recurrence.
    pub fn eval(&self, y: f64) -> f64 {
        gegenbauer_eval(self.degree, self.lambda, y)
    }
}

/// Builds `C_n^λ` from
/// `k C_k = 2(k+λ−1) y C_{k−1} − (k+2λ−2) C_{k−2}`, `C_0 = 1`, `C_1 = 2λy`.
pub fn gegenbauer(n: usize, lambda: f64) -> Result<GegenbauerPoly> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::domain(
            "gegenbauer",
            format!("index λ = {lambda} must be positive"),
        ));
    }
    let mut prev: Vec<f64> = vec![1.0];
    if n == 0 {
        return Ok(GegenbauerPoly {
            degree: 0,
            lambda,
            coeffs: prev,
        });
    }
    let mut cur: Vec<f64> = vec![0.0, 2.0 * lambda];
    for k in 2..=n {
        let kf = k as f64;
        let a = 2.0 * (kf + lambda - 1.0) / kf;
        let b = (kf + 2.0 * lambda - 2.0) / kf;
        let mut next = vec![0.0; k + 1];
        for (j, &c) in cur.iter().enumerate() {
            next[j + 1] += a * c;
        }
        for (j, &c) in prev.iter().enumerate() {
            next[j] -= b * c;
        }
        // the recurrence preserves parity; clear rounding residue in the
        // opposite-parity slots
        for (j, v) in next.iter_mut().enumerate() {
            if (j + k) % 2 == 1 {
                *v = 0.0;
            }
        }
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(GegenbauerPoly {
        degree: n,
        lambda,
        coeffs: cur,
    })
}

/// `C_n^λ(y)` by forward recurrence.
pub fn gegenbauer_eval(n: usize, lambda: f64, y: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * lambda * y;
    for k in 2..=n {
        let kf = k as f64;
        let next = (2.0 * (kf + lambda - 1.0) * y * cur - (kf + 2.0 * lambda - 2.0) * prev) / kf;
        prev = cur;
        cur = next;
    }
    cur
}

/// `C_0^λ(y), …, C_n^λ(y)` in one pass.
pub fn gegenbauer_eval_all(n: usize, lambda: f64, y: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(1.0);
    if n == 0 {
        return out;
    }
    out.push(2.0 * lambda * y);
    for k in 2..=n {
        let kf = k as f64;
        let v = (2.0 * (kf + lambda - 1.0) * y * out[k - 1] - (kf + 2.0 * lambda - 2.0) * out[k - 2]) / kf;
        out.push(v);
    }
    out
}
