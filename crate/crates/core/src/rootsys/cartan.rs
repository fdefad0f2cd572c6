use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Cartan-Killing family of a simple Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// Cartan matrix of a simple type, Bourbaki node labelling.
///
/// Convention: `a[i][j] = alpha_j(h_i) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`,
/// so row `i` lists the values of the simple roots on the coroot `h_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    family: Family,
    rank: usize,
    matrix: Vec<Vec<i64>>,
}

impl CartanDatum {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let matrix = standard_matrix(family, rank).ok_or_else(|| Error::UnknownType {
            family: family.to_string(),
            rank,
        })?;
        let d = CartanDatum { family, rank, matrix };
        d.validate()?;
        Ok(d)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    fn validate(&self) -> Result<()> {
        let n = self.rank;
        for i in 0..n {
            if self.matrix[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (self.matrix[i][j], self.matrix[j][i]);
                if a > 0 {
                    return Err(Error::InvalidCartan(format!("positive entry at ({i},{j})")));
                }
                if (a == 0) != (b == 0) {
                    return Err(Error::InvalidCartan(format!("asymmetric zero pattern at ({i},{j})")));
                }
            }
        }
        Ok(())
    }

    /// Root lengths squared, normalized so the short roots have length 2.
    pub fn symmetrizer(&self) -> Vec<i64> {
        let n = self.rank;
        // d_j = d_i * a_ij / a_ji along edges; connected diagram
        let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
        d[0] = Some((1, 1));
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            let (num, den) = d[i].unwrap();
            for j in 0..n {
                if j != i && self.matrix[i][j] != 0 && d[j].is_none() {
                    let nn = num * self.matrix[i][j].abs();
                    let dd = den * self.matrix[j][i].abs();
                    let g = gcd(nn.abs(), dd.abs());
                    d[j] = Some((nn / g, dd / g));
                    stack.push(j);
                }
            }
        }
        let ratios: Vec<(i64, i64)> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
        // scale so the smallest becomes 2
        let lcm_den = ratios.iter().fold(1, |acc, &(_, den)| acc / gcd(acc, den) * den);
        let ints: Vec<i64> = ratios.iter().map(|&(n, den)| n * (lcm_den / den)).collect();
        let min = *ints.iter().min().unwrap();
        ints.iter().map(|&x| 2 * x / min).collect()
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn standard_matrix(family: Family, rank: usize) -> Option<Vec<Vec<i64>>> {
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        Family::A if n >= 1 => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
        }
        Family::B if n >= 2 => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            // alpha_n short
            a[n - 1][n - 2] = -2;
        }
        Family::C if n >= 2 => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            // alpha_n long
            a[n - 2][n - 1] = -2;
        }
        Family::D if n >= 4 => {
            for i in 0..n - 2 {
                link(&mut a, i, i + 1);
            }
            link(&mut a, n - 3, n - 1);
        }
        Family::E if (6..=8).contains(&n) => {
            link(&mut a, 0, 2);
            link(&mut a, 1, 3);
            for i in 2..n - 1 {
                link(&mut a, i, i + 1);
            }
        }
        Family::F if n == 4 => {
            link(&mut a, 0, 1);
            link(&mut a, 1, 2);
            link(&mut a, 2, 3);
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            a[2][1] = -2;
        }
        Family::G if n == 2 => {
            // alpha_1 short, alpha_2 long
            a[0][1] = -3;
            a[1][0] = -1;
        }
        _ => return None,
    }
    Some(a)
}

/// Degrees of the basic invariants.
pub fn invariant_degrees(family: Family, rank: usize) -> Vec<usize> {
    let n = rank;
    match family {
        Family::A => (2..=n + 1).collect(),
        Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
        Family::D => {
            let mut d: Vec<usize> = (1..n).map(|i| 2 * i).collect();
            d.push(n);
            d.sort_unstable();
            d
        }
        Family::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Family::F => vec![2, 6, 8, 12],
        Family::G => vec![2, 6],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unknown_types() {
        assert!(CartanDatum::new(Family::G, 3).is_err());
        assert!(CartanDatum::new(Family::B, 1).is_err());
        assert!(CartanDatum::new(Family::D, 3).is_err());
        assert!(CartanDatum::new(Family::A, 0).is_err());
        assert!(CartanDatum::new(Family::E, 5).is_err());
    }

    #[test]
    fn symmetrizers() {
        assert_eq!(CartanDatum::new(Family::A, 3).unwrap().symmetrizer(), vec![2, 2, 2]);
        assert_eq!(CartanDatum::new(Family::B, 2).unwrap().symmetrizer(), vec![4, 2]);
        assert_eq!(CartanDatum::new(Family::C, 3).unwrap().symmetrizer(), vec![2, 2, 4]);
        assert_eq!(CartanDatum::new(Family::G, 2).unwrap().symmetrizer(), vec![2, 6]);
        assert_eq!(CartanDatum::new(Family::F, 4).unwrap().symmetrizer(), vec![4, 4, 2, 2]);
    }

    #[test]
    fn symmetrized_matrix_is_symmetric() {
        for (f, r) in [(Family::B, 3), (Family::C, 4), (Family::F, 4), (Family::G, 2), (Family::E, 6), (Family::D, 5)] {
            let c = CartanDatum::new(f, r).unwrap();
            let d = c.symmetrizer();
            for i in 0..r {
                for j in 0..r {
                    assert_eq!(c.entry(i, j) * d[i], c.entry(j, i) * d[j], "{f}{r}");
                }
            }
        }
    }

    #[test]
    fn parses_family() {
        assert_eq!("b".parse::<Family>().unwrap(), Family::B);
        assert!("X".parse::<Family>().is_err());
    }
}
