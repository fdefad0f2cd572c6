use std::collections::HashMap;

use super::CartanDatum;

/// Element of the Weyl group stored as a reduced word in the simple
/// reflections together with its matrix on fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// `w = s_{word[0]} s_{word[1]} ...`
    pub word: Vec<usize>,
    /// Column `j` is `w(omega_j)` in fundamental coordinates.
    pub matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `(-1)^{length}`.
    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn apply(&self, m: &[i64]) -> Vec<i64> {
        let n = m.len();
        (0..n).map(|i| (0..n).map(|j| self.matrix[i][j] * m[j]).sum()).collect()
    }
}

/// Simple reflection on fundamental coordinates: `s_i(m) = m - m_i alpha_i`.
pub fn reflect(datum: &CartanDatum, i: usize, m: &mut [i64]) {
    let mi = m[i];
    if mi == 0 {
        return;
    }
    for (j, x) in m.iter_mut().enumerate() {
        *x -= mi * datum.entry(j, i);
    }
}

/// Breadth-first enumeration through the orbit of `rho`, which is regular,
/// so orbit points and group elements correspond and BFS depth is length.
pub(crate) fn enumerate(datum: &CartanDatum) -> Vec<WeylElement> {
    let n = datum.rank();
    let rho = vec![1i64; n];
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    seen.insert(rho.clone(), 0);
    let mut points = vec![rho];
    let mut head = 0;
    while head < points.len() {
        let p = points[head].clone();
        let w = words[head].clone();
        head += 1;
        for i in 0..n {
            let mut np = p.clone();
            reflect(datum, i, &mut np);
            if !seen.contains_key(&np) {
                seen.insert(np.clone(), points.len());
                let mut nw = vec![i];
                nw.extend_from_slice(&w);
                points.push(np);
                words.push(nw);
            }
        }
    }
    words
        .into_iter()
        .map(|word| {
            let mut cols = Vec::with_capacity(n);
            for j in 0..n {
                let mut v: Vec<i64> = (0..n).map(|k| i64::from(k == j)).collect();
                for &i in word.iter().rev() {
                    reflect(datum, i, &mut v);
                }
                cols.push(v);
            }
            let matrix = (0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect();
            WeylElement { word, matrix }
        })
        .collect()
}
