use mp_core::polys::*;
fn main() {
    let p = KrawtchoukParams::new(8, 0.3).unwrap();
    println!("kraw recursion residual: {:e}", krawtchouk_recursion_residual(&p).unwrap());
    let total: f64 = (0..=8).map(|m| krawtchouk_weight(&p, m).unwrap()).sum();
    println!("kraw weight sum - 1: {:e}", total - 1.0);
    let m = MeixnerParams::new(1.1, 0.4).unwrap();
    println!("meixner gram dev: {:e}", gram_discrete_meixner(&m, 8).max_deviation);
    println!("meixner recursion residual (3,10): {:e}", meixner_recursion_residual(&m, 3, 10));
    let mp = MPParams::new(1.1, std::f64::consts::PI/3.0).unwrap();
    let g = gram_continuous(&mp, 10, &QuadratureSpec::default()).unwrap();
    println!("mp gram dev: {:e}  cutoff: {:?}", g.max_deviation, g.cutoff);
}
