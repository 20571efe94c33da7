use artin::brace::{catalog, verify_brace_identity};
use artin::coxeter::{CoxeterMatrix, GroupTable, IrreducibleType};
use artin::garside::Garside;
use artin::order::PosetBall;
use artin::ExecMode;
use criterion::{criterion_group, criterion_main, Criterion};

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_f4");
    let m = CoxeterMatrix::of_type('F', 4).unwrap();
    for mode in [ExecMode::Sequential, ExecMode::Parallel] {
        group.bench_function(format!("{mode}"), |b| {
            b.iter(|| GroupTable::enumerate_with_mode(&m, 10_000, mode).unwrap().order())
        });
    }
    group.finish();
}

fn bench_ball(c: &mut Criterion) {
    let mut group = c.benchmark_group("ball_a3_h6");
    group.sample_size(20);
    let t = GroupTable::for_type(IrreducibleType::new('A', 3).unwrap()).unwrap();
    let g = Garside::new(&t);
    for mode in [ExecMode::Sequential, ExecMode::Parallel] {
        group.bench_function(format!("{mode}"), |b| {
            b.iter(|| PosetBall::build(&g, 6, mode).unwrap().len())
        });
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_i5_500");
    group.sample_size(20);
    let ty = IrreducibleType::new('I', 5).unwrap();
    let t = GroupTable::for_type(ty).unwrap();
    let g = Garside::new(&t);
    let spec = catalog(ty).remove(0);
    for mode in [ExecMode::Sequential, ExecMode::Parallel] {
        group.bench_function(format!("{mode}"), |b| {
            b.iter(|| {
                verify_brace_identity(&spec, &g, 500, 1, mode)
                    .unwrap()
                    .violations
                    .len()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_enumerate, bench_ball, bench_verify);
criterion_main!(benches);
