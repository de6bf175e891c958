import { createHash } from "node:crypto";
import { mkdtempSync, readFileSync, writeFileSync, existsSync } from "node:fs";
import { tmpdir } from "node:os";
import path from "node:path";
import { describe, expect, it } from "vitest";

import { main, parseArgs } from "../src/cli.js";
import { CSV_COLUMNS } from "../src/csv.js";

const FIXTURE = path.join(__dirname, "fixtures", "default_run.csv");

function tmp(): string {
  return mkdtempSync(path.join(tmpdir(), "figures-"));
}

describe("parseArgs", () => {
  it("parses the documented interface", () => {
    const a = parseArgs(["--in", "run.csv", "--out", "d", "--which", "bipartite"]);
    expect(a).toEqual({ input: "run.csv", outDir: "d", which: "bipartite" });
    expect(parseArgs(["--in", "x", "--out", "y"]).which).toBe("all");
  });

  it("rejects unknown flags and missing values", () => {
    expect(() => parseArgs(["--frobnicate"])).toThrowError(/unknown/);
    expect(() => parseArgs(["--in", "x"])).toThrowError(/required/);
    expect(() => parseArgs(["--in", "x", "--out", "y", "--which", "pie"])).toThrowError(/which/);
  });
});

describe("main", () => {
  it("writes three SVGs from a default run and leaves the input untouched", async () => {
    const before = createHash("sha256").update(readFileSync(FIXTURE)).digest("hex");
    const out = tmp();
    const code = await main(["--in", FIXTURE, "--out", out, "--which", "all"]);
    expect(code).toBe(0);
    for (const name of ["delta_N2.svg", "delta_D.svg", "bipartite.svg"]) {
      expect(existsSync(path.join(out, name))).toBe(true);
    }
    const after = createHash("sha256").update(readFileSync(FIXTURE)).digest("hex");
    expect(after).toBe(before);
  });

  it("succeeds on a header-only CSV", async () => {
    const dir = tmp();
    const input = path.join(dir, "empty.csv");
    writeFileSync(input, CSV_COLUMNS.join(",") + "\n");
    const code = await main(["--in", input, "--out", path.join(dir, "figs")]);
    expect(code).toBe(0);
    expect(existsSync(path.join(dir, "figs", "delta_N2.svg"))).toBe(true);
  });

  it("exits nonzero on a schema mismatch, naming the column", async () => {
    const dir = tmp();
    const input = path.join(dir, "bad.csv");
    writeFileSync(input, CSV_COLUMNS.join(",").replace("D12", "d12") + "\n");
    const code = await main(["--in", input, "--out", path.join(dir, "figs")]);
    expect(code).toBe(2);
  });

  it("exits 1 on bad usage and 2 on a missing input file", async () => {
    expect(await main(["--what"])).toBe(1);
    expect(await main(["--in", "/nonexistent.csv", "--out", tmp()])).toBe(2);
  });
});
