use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use tracechar::farey::Slope;
use tracechar::fricke::{reduce_trace_word, subset_traces, trace_of_word_direct, variety_residual, CharPoint3};
use tracechar::planar::{
    check_trace_function_05, exceptional_enumerate, glue_sigma05, orbit_count, Glue, GlueBranch, TraceData05, Verdict05,
};
use tracechar::random::random_sl2;
use tracechar::sl2::{realize_triple, trace_identities, traces_of, IDENTITY_NAMES};
use tracechar::surfchar::{tf04_extend, tf04_residual, tf11_extend};
use tracechar::{Elem, Rep, Word};

use crate::io::{elems, field, malformed, matrix_json, rep_json};
use crate::{Ctx, Failure};

type Out = Result<Value, Failure>;

pub fn realize(ctx: &Ctx, input: &Value) -> Out {
    let t: [Elem; 6] = elems(&ctx.tower, field(input, "traces")?)?;
    let m = realize_triple(&t[0], &t[1], &t[2], &t[3], &t[4], &t[5])?;
    let verified = traces_of(&m) == t;
    let body = json!({ "matrices": m.iter().map(matrix_json).collect::<Vec<_>>(), "verified": verified });
    if verified {
        Ok(body)
    } else {
        Err(Failure::Rejected(body))
    }
}

pub fn tracepoly(input: &Value) -> Out {
    let text = field(input, "word")?.as_str().ok_or_else(|| malformed("'word' must be a string"))?;
    let w = Word::parse(text)?;
    let p = reduce_trace_word(&w);
    Ok(json!({ "word": w.to_string(), "rank": w.max_generator(), "polynomial": p.to_string(), "terms": p.to_json() }))
}

pub fn variety(ctx: &Ctx, input: &Value) -> Out {
    let [t1, t2, t3, t12, t23, t31, t123]: [Elem; 7] = elems(&ctx.tower, field(input, "point")?)?;
    let r = variety_residual(&CharPoint3 { t1, t2, t3, t12, t23, t31, t123 });
    let body = json!({ "residual": r.to_string(), "on_variety": r.is_zero() });
    if r.is_zero() {
        Ok(body)
    } else {
        Err(Failure::Rejected(body))
    }
}

fn slopes(input: &Value) -> Result<Vec<Slope>, Failure> {
    field(input, "slopes")?
        .as_array()
        .ok_or_else(|| malformed("'slopes' must be a list"))?
        .iter()
        .map(|s| s.as_str().ok_or_else(|| malformed("slopes are strings like \"2/3\""))?.parse::<Slope>().map_err(Failure::from))
        .collect()
}

pub fn propagate(ctx: &Ctx, input: &Value) -> Out {
    let surface = field(input, "surface")?.as_str().unwrap_or_default();
    let targets = slopes(input)?;
    let table = |vals: Vec<(Slope, Elem)>| vals.into_iter().map(|(s, v)| json!({ "slope": s.to_string(), "value": v.to_string() })).collect::<Vec<_>>();
    match surface {
        "torus" => {
            let [v1, v2, v3]: [Elem; 3] = elems(&ctx.tower, field(input, "seed")?)?;
            let mut f = tf11_extend(&v1, &v2, &v3);
            let vals = targets.iter().map(|&s| (s, f.query(s))).collect();
            Ok(json!({ "surface": surface, "boundary": f.boundary().to_string(), "values": table(vals) }))
        }
        "sphere4" => {
            let b: [Elem; 4] = elems(&ctx.tower, field(input, "boundary")?)?;
            let a: [Elem; 3] = elems(&ctx.tower, field(input, "seed")?)?;
            let Ok(mut f) = tf04_extend(&b, &a) else {
                return Err(Failure::Rejected(json!({ "error": "seed is off the relation", "residual": tf04_residual(&b, &a).to_string() })));
            };
            let vals = targets.iter().map(|&s| (s, f.query(s))).collect();
            Ok(json!({ "surface": surface, "reducible": f.reducible(), "values": table(vals) }))
        }
        other => Err(malformed(format!("unknown surface '{other}', expected 'torus' or 'sphere4'"))),
    }
}

fn data05(ctx: &Ctx, input: &Value) -> Result<TraceData05<Elem>, Failure> {
    Ok(TraceData05::from_json(input, |v| Elem::from_json(v, &ctx.tower))?)
}

pub fn check05(ctx: &Ctx, input: &Value) -> Out {
    match check_trace_function_05(&data05(ctx, input)?) {
        Verdict05::Character(rep) => Ok(json!({ "verdict": "character", "rep": rep_json(&rep) })),
        Verdict05::Exceptional => Ok(json!({ "verdict": "exceptional" })),
        Verdict05::Invalid(w) => Err(Failure::Rejected(json!({ "verdict": "invalid", "witness": w }))),
    }
}

pub fn glue05(ctx: &Ctx, input: &Value) -> Out {
    match glue_sigma05(&data05(ctx, input)?)? {
        Glue::Glued { rep, branch, frame } => {
            let branch = match branch {
                GlueBranch::IrreducibleMiddle => "irreducible-middle",
                GlueBranch::Diagonal => "diagonal",
            };
            Ok(json!({ "result": "glued", "branch": branch, "frame": frame, "rep": rep_json(&rep) }))
        }
        Glue::Obstruction => Ok(json!({ "result": "exceptional-obstruction" })),
    }
}

pub fn exceptional(ctx: &Ctx, n: usize, max_n: usize, orbits: bool) -> Out {
    if n > max_n {
        return Err(malformed(format!("n = {n} exceeds --max-n {max_n}")));
    }
    let fs = exceptional_enumerate(n, &ctx.tower.zero(), ctx.jobs)?;
    let mut body = json!({
        "n": n,
        "count": fs.len(),
        "functions": fs.iter().map(|f| f.to_json()).collect::<Vec<_>>(),
    });
    if orbits {
        body["orbits"] = json!(orbit_count(&fs));
    }
    Ok(body)
}

/// Outcome of one sample: the four identities, then the reducer on a word.
fn identity_sample(ctx: &Ctx, i: usize) -> ([bool; 4], bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    rng.set_stream(i as u64);
    let z = ctx.tower.zero();
    let m = [random_sl2(&z, &mut rng), random_sl2(&z, &mut rng), random_sl2(&z, &mut rng)];
    let ids = trace_identities(&m);
    let len = rng.gen_range(1..=8);
    let w = Word::new((0..len).map(|_| {
        let g = rng.gen_range(1..=3);
        if rng.gen_bool(0.5) {
            g
        } else {
            -g
        }
    }));
    let rep = Rep::new(m.to_vec()).expect("three generators");
    let p = reduce_trace_word(&w);
    let reduced = p.eval_map(&z, &subset_traces(&rep)).map(|v| v == trace_of_word_direct(&rep, &w)).unwrap_or(false);
    (ids, reduced)
}

pub fn identities(ctx: &Ctx, samples: usize) -> Out {
    let results = Mutex::new(vec![None; samples]);
    std::thread::scope(|scope| {
        for j in 0..ctx.jobs.min(samples.max(1)) {
            let results = &results;
            scope.spawn(move || {
                for i in (j..samples).step_by(ctx.jobs) {
                    let r = identity_sample(ctx, i);
                    results.lock().unwrap()[i] = Some(r);
                }
            });
        }
    });
    let results: Vec<([bool; 4], bool)> = results.into_inner().unwrap().into_iter().map(Option::unwrap).collect();
    let mut report = serde_json::Map::new();
    for (k, name) in IDENTITY_NAMES.iter().enumerate() {
        let failed: Vec<usize> = (0..samples).filter(|&i| !results[i].0[k]).collect();
        report.insert(format!("identity_{name}"), json!({ "checked": samples, "failed": failed }));
    }
    let failed: Vec<usize> = (0..samples).filter(|&i| !results[i].1).collect();
    report.insert("reducer".into(), json!({ "checked": samples, "failed": failed }));
    let all_pass = report.values().all(|v| v["failed"].as_array().is_some_and(Vec::is_empty));
    let body = json!({ "samples": samples, "identities": report, "all_pass": all_pass });
    if all_pass {
        Ok(body)
    } else {
        Err(Failure::Rejected(body))
    }
}
