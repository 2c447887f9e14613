use crate::Scalar;

/// Half-open pixel rectangle `[x0, x1) × [y0, y1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rect {
    pub x0: usize,
    pub y0: usize,
    pub x1: usize,
    pub y1: usize,
}

impl Rect {
    pub fn full(h: usize, w: usize) -> Self {
        Rect { x0: 0, y0: 0, x1: w, y1: h }
    }

    pub fn empty() -> Self {
        Rect { x0: 0, y0: 0, x1: 0, y1: 0 }
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.x0 >= self.x1 || self.y0 >= self.y1
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.x1.saturating_sub(self.x0)
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.y1.saturating_sub(self.y0)
    }

    pub fn area(&self) -> usize {
        self.width() * self.height()
    }
}

/// Row-major single-channel H×W field.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid<T> {
    h: usize,
    w: usize,
    data: Vec<T>,
}

impl<T: Scalar> Grid<T> {
    pub fn zeros(h: usize, w: usize) -> Self {
        Grid { h, w, data: T::zeroed_vec(h * w) }
    }

    pub fn from_fn(h: usize, w: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(h * w);
        for y in 0..h {
            for x in 0..w {
                data.push(f(y, x));
            }
        }
        Grid { h, w, data }
    }

    pub fn from_vec(h: usize, w: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), h * w, "grid data length mismatch");
        Grid { h, w, data }
    }

    pub fn fill(&mut self, v: T) {
        self.data.fill(v);
    }

    #[inline]
    pub fn h(&self) -> usize {
        self.h
    }

    #[inline]
    pub fn w(&self) -> usize {
        self.w
    }

    #[inline]
    pub fn at(&self, y: usize, x: usize) -> T {
        self.data[y * self.w + x]
    }

    #[inline]
    pub fn at_mut(&mut self, y: usize, x: usize) -> &mut T {
        &mut self.data[y * self.w + x]
    }

    #[inline]
    pub fn row(&self, y: usize) -> &[T] {
        &self.data[y * self.w..(y + 1) * self.w]
    }

    #[inline]
    pub fn row_mut(&mut self, y: usize) -> &mut [T] {
        let w = self.w;
        &mut self.data[y * w..(y + 1) * w]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn max_value(&self) -> T {
        self.data.iter().fold(T::neg_infinity(), |m, &v| m.max(v))
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.h == other.h && self.w == other.w
    }
}

/// Row-major H×W×3 RGB image. Channel values are expected in [0, 1] for
/// canvases; stroke color maps share the type.
#[derive(Clone, Debug, PartialEq)]
pub struct Canvas<T> {
    h: usize,
    w: usize,
    data: Vec<T>,
}

impl<T: Scalar> Canvas<T> {
    pub fn zeros(h: usize, w: usize) -> Self {
        Canvas { h, w, data: T::zeroed_vec(h * w * 3) }
    }

    /// Constant-color canvas.
    pub fn splat(h: usize, w: usize, rgb: [T; 3]) -> Self {
        let mut data = Vec::with_capacity(h * w * 3);
        for _ in 0..h * w {
            data.extend_from_slice(&rgb);
        }
        Canvas { h, w, data }
    }

    pub fn from_fn(h: usize, w: usize, mut f: impl FnMut(usize, usize) -> [T; 3]) -> Self {
        let mut data = Vec::with_capacity(h * w * 3);
        for y in 0..h {
            for x in 0..w {
                data.extend_from_slice(&f(y, x));
            }
        }
        Canvas { h, w, data }
    }

    pub fn from_vec(h: usize, w: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), h * w * 3, "canvas data length mismatch");
        Canvas { h, w, data }
    }

    #[inline]
    pub fn h(&self) -> usize {
        self.h
    }

    #[inline]
    pub fn w(&self) -> usize {
        self.w
    }

    #[inline]
    pub fn pixel(&self, y: usize, x: usize) -> [T; 3] {
        let i = (y * self.w + x) * 3;
        [self.data[i], self.data[i + 1], self.data[i + 2]]
    }

    #[inline]
    pub fn pixel_mut(&mut self, y: usize, x: usize) -> &mut [T] {
        let i = (y * self.w + x) * 3;
        &mut self.data[i..i + 3]
    }

    #[inline]
    pub fn set_pixel(&mut self, y: usize, x: usize, rgb: [T; 3]) {
        let i = (y * self.w + x) * 3;
        self.data[i..i + 3].copy_from_slice(&rgb);
    }

    #[inline]
    pub fn row(&self, y: usize) -> &[T] {
        &self.data[y * self.w * 3..(y + 1) * self.w * 3]
    }

    #[inline]
    pub fn row_mut(&mut self, y: usize) -> &mut [T] {
        let stride = self.w * 3;
        &mut self.data[y * stride..(y + 1) * stride]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.h == other.h && self.w == other.w
    }

    /// Greatest absolute channel difference between two same-shape canvases.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert!(self.same_shape(other), "canvas shape mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |m, (&a, &b)| m.max((a - b).abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_indexing_round_trip() {
        let mut g = Grid::<f64>::zeros(3, 5);
        *g.at_mut(2, 4) = 7.0;
        *g.at_mut(0, 0) = -1.0;
        assert_eq!(g.at(2, 4), 7.0);
        assert_eq!(g.at(0, 0), -1.0);
        assert_eq!(g.row(2)[4], 7.0);
        assert_eq!(g.max_value(), 7.0);
    }

    #[test]
    fn canvas_pixel_round_trip() {
        let mut c = Canvas::<f32>::zeros(2, 2);
        c.set_pixel(1, 0, [0.1, 0.2, 0.3]);
        assert_eq!(c.pixel(1, 0), [0.1, 0.2, 0.3]);
        assert_eq!(c.pixel(0, 0), [0.0, 0.0, 0.0]);
    }

    #[test]
    fn max_abs_diff_picks_worst_channel() {
        let a = Canvas::<f64>::splat(2, 2, [0.2, 0.2, 0.2]);
        let mut b = a.clone();
        b.set_pixel(0, 1, [0.2, 0.9, 0.2]);
        assert!((a.max_abs_diff(&b) - 0.7).abs() < 1e-15);
    }

    #[test]
    fn rect_geometry() {
        let r = Rect { x0: 2, y0: 1, x1: 5, y1: 4 };
        assert_eq!(r.width(), 3);
        assert_eq!(r.height(), 3);
        assert_eq!(r.area(), 9);
        assert!(!r.is_empty());
        assert!(Rect::empty().is_empty());
    }
}
