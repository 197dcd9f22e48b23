use super::Field;

/// Incremental echelon basis used to test linear independence.
#[derive(Clone, Debug, Default)]
pub struct Echelon<T> {
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: Field> Echelon<T> {
    pub fn new() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The most recently inserted (reduced) row.
    pub fn last(&self) -> &[T] {
        &self.rows.last().expect("nonempty").1
    }

    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut x = v.to_vec();
        for (p, b) in &self.rows {
            if x[*p].is_zero() {
                continue;
            }
            let f = x[*p].clone() * b[*p].inv().expect("pivot");
            for (xj, bj) in x.iter_mut().zip(b) {
                if !bj.is_zero() {
                    *xj = xj.clone() - f.clone() * bj.clone();
                }
            }
        }
        x
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v` if it is independent of the current rows.
    pub fn insert(&mut self, v: &[T]) -> bool {
        let x = self.reduce(v);
        match x.iter().position(|y| !y.is_zero()) {
            Some(p) => {
                self.rows.push((p, x));
                true
            }
            None => false,
        }
    }
}

