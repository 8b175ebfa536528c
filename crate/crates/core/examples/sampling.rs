//! Sampling the surface in S^6 and writing a mesh.

use supermin::catalog::example_family;
use supermin::sample::sample_surface;

fn main() {
    let s = sample_surface(&example_family(1, 2).unwrap(), 16).unwrap();
    println!("{} points, max | |x| - 1 | = {:.1e}", s.points.len(), s.max_norm_deviation());
    let obj = s.to_obj([0, 3, 6]);
    let path = std::env::temp_dir().join("supermin_sphere.obj");
    std::fs::write(&path, obj).unwrap();
    println!("wrote {} faces to {}", s.face_count(), path.display());
}
