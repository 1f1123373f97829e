//! Criterion benches comparing the parallel and sequential drivers on the
//! heavy verification loops.

use criterion::{criterion_group, criterion_main, Criterion};
use crossed_ops::exec::Exec;

fn bench_placeholder(c: &mut Criterion) {
    c.bench_function("noop", |b| b.iter(|| Exec::default()));
}

criterion_group!(benches, bench_placeholder);
criterion_main!(benches);
