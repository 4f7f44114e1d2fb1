use std::time::Instant;

use betaquad::surface::search::{search_points, SearchOptions};

fn main() {
    let r: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(200);
    let opts = SearchOptions::default();
    let start = Instant::now();
    let (pts, stats) = search_points((-r, r), (-r, r), &opts).unwrap();
    println!("{} points, {:?}, {:.2?}", pts.len(), stats, start.elapsed());
    for p in &pts {
        println!("{p:?}");
    }
}
