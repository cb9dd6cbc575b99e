use super::grid::GridSample;

/// Grid points of an excursion-like sample with the tree pseudo-distance
/// `d(i, j) = f(i) + f(j) - 2 min f[i..=j]`.
#[derive(Debug, Clone)]
pub struct TreePointCloud {
    values: Vec<f64>,
    // sparse[k][i] = min of values[i .. i + 2^k]
    sparse: Vec<Vec<f64>>,
}

/// A finite pseudo-metric space indexed by `0..len`.
pub trait PseudoMetric {
    fn len(&self) -> usize;

    fn dist(&self, i: usize, j: usize) -> f64;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Calls `visit` on every point within distance `r` of `center`
    /// (closed ball).
    fn ball(&self, center: usize, r: f64, visit: &mut dyn FnMut(usize)) {
        for j in 0..self.len() {
            if self.dist(center, j) <= r {
                visit(j);
            }
        }
    }
}

impl TreePointCloud {
    pub fn new(values: Vec<f64>) -> Self {
        let n = values.len();
        let mut sparse = vec![values.clone()];
        let mut width = 1;
        while 2 * width <= n {
            let prev = sparse.last().expect("non-empty");
            let next: Vec<f64> = (0..=n - 2 * width).map(|i| prev[i].min(prev[i + width])).collect();
            sparse.push(next);
            width *= 2;
        }
        TreePointCloud { values, sparse }
    }

    pub fn from_sample(sample: &GridSample) -> Self {
        Self::new(sample.values().to_vec())
    }

    /// The segment `[0, 1]` with its usual metric, on `points` equally
    /// spaced points (encoded by `f(s) = s`).
    pub fn line(points: usize) -> Self {
        Self::new(super::grid::uniform_grid(points))
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `min f[i..=j]` for `i <= j`.
    pub fn range_min(&self, i: usize, j: usize) -> f64 {
        let len = j - i + 1;
        let k = usize::BITS - 1 - len.leading_zeros();
        let w = 1usize << k;
        self.sparse[k as usize][i].min(self.sparse[k as usize][j + 1 - w])
    }
}

impl PseudoMetric for TreePointCloud {
    fn len(&self) -> usize {
        self.values.len()
    }

    fn dist(&self, i: usize, j: usize) -> f64 {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        self.values[a] + self.values[b] - 2.0 * self.range_min(a, b)
    }

    fn ball(&self, center: usize, r: f64, visit: &mut dyn FnMut(usize)) {
        let f = &self.values;
        let fc = f[center];
        visit(center);
        // d(c, j) >= f(c) - min, and the running min only drops further out
        let mut run = fc;
        for (j, &fj) in f.iter().enumerate().skip(center + 1) {
            run = run.min(fj);
            if fc - run > r {
                break;
            }
            if fc + fj - 2.0 * run <= r {
                visit(j);
            }
        }
        let mut run = fc;
        for j in (0..center).rev() {
            run = run.min(f[j]);
            if fc - run > r {
                break;
            }
            if fc + f[j] - 2.0 * run <= r {
                visit(j);
            }
        }
    }
}

/// A pseudo-metric given by an explicit symmetric matrix.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    d: Vec<Vec<f64>>,
}

impl DistanceMatrix {
    pub fn new(d: Vec<Vec<f64>>) -> Self {
        DistanceMatrix { d }
    }
}

impl PseudoMetric for DistanceMatrix {
    fn len(&self) -> usize {
        self.d.len()
    }

    fn dist(&self, i: usize, j: usize) -> f64 {
        self.d[i][j]
    }
}
