use std::fmt;

use serde::Serialize;

/// Monomial `x^a` stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Bitmask of variables with a positive exponent.
    pub fn support(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Renders as LaTeX with variables named `x_1 … x_n`.
    pub fn to_latex(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => out.push_str(&format!("x_{{{}}}", i + 1)),
                _ => out.push_str(&format!("x_{{{}}}^{{{}}}", i + 1, e)),
            }
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl From<Vec<u32>> for Monomial {
    fn from(v: Vec<u32>) -> Self {
        Monomial(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial(vec![2, 0, 1]);
        let b = Monomial(vec![1, 1, 0]);
        assert_eq!(a.lcm(&b), Monomial(vec![2, 1, 1]));
        assert_eq!(a.mul(&b), Monomial(vec![3, 1, 1]));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.div(&Monomial(vec![1, 0, 1])), Some(Monomial(vec![1, 0, 0])));
        assert!(Monomial::one(3).divides(&a));
        assert_eq!(a.degree(), 3);
        assert_eq!(a.support(), 0b101);
    }

    #[test]
    fn rendering() {
        assert_eq!(Monomial(vec![2, 0, 1]).to_latex(), "x_{1}^{2}x_{3}");
        assert_eq!(Monomial(vec![0, 0]).to_latex(), "1");
        assert_eq!(Monomial(vec![0, 1, 3]).to_string(), "x2*x3^3");
    }
}
