use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Keys dropped before hashing: they depend on scheduling, not on inputs.
const VOLATILE_KEYS: [&str; 1] = ["nodes_explored"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(path: &str, bytes: &[u8]) -> Self {
        InputDigest {
            path: path.to_string(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

/// Everything one invocation produced. `digest` covers the command, input
/// digests, seed and result, with timing and search statistics left out.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub args: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub seed: u64,
    pub result: Value,
    pub digest: String,
    pub timing_ms: f64,
}

impl RunReport {
    pub fn new(
        command: &str,
        args: Vec<String>,
        inputs: Vec<InputDigest>,
        seed: u64,
        result: Value,
        timing_ms: f64,
    ) -> Self {
        let digest = digest_of(command, &inputs, seed, &result);
        RunReport {
            command: command.to_string(),
            args,
            inputs,
            seed,
            result,
            digest,
            timing_ms,
        }
    }
}

fn strip(value: &mut Value) {
    match value {
        Value::Object(map) => {
            for key in VOLATILE_KEYS {
                map.remove(key);
            }
            map.values_mut().for_each(strip);
        }
        Value::Array(items) => items.iter_mut().for_each(strip),
        _ => {}
    }
}

pub fn digest_of(command: &str, inputs: &[InputDigest], seed: u64, result: &Value) -> String {
    let mut result = result.clone();
    strip(&mut result);
    let hashed: Vec<&str> = inputs.iter().map(|i| i.sha256.as_str()).collect();
    let canonical = serde_json::json!({
        "command": command,
        "inputs": hashed,
        "seed": seed,
        "result": result,
    });
    hex::encode(Sha256::digest(canonical.to_string().as_bytes()))
}
