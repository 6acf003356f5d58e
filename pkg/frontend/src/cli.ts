#!/usr/bin/env node
/**
 * Thin CLI over the renderers.
 *
 *   nldirac-plotkit panels  --out fig.png [--component both] snap...csv
 *   nldirac-plotkit animate --out anim.gif [--fps 2] [--component both] <dir|csv...>
 *
 * Exit codes: 0 ok, 1 usage, 2 data or render error.
 */
import * as fs from "node:fs";

import { renderAnimation } from "./animation.js";
import { ComponentSelection } from "./panels.js";
import { renderPanels } from "./panels.js";

interface ParsedArgs {
  out?: string;
  component: ComponentSelection;
  fps: number;
  positional: string[];
}

function parseArgs(argv: string[]): ParsedArgs {
  const parsed: ParsedArgs = { component: "both", fps: 2, positional: [] };
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === "--out") {
      parsed.out = argv[++i];
    } else if (arg === "--component") {
      const value = argv[++i];
      if (value !== "upper" && value !== "lower" && value !== "both") {
        throw new UsageError(`--component must be upper|lower|both, got ${value}`);
      }
      parsed.component = value;
    } else if (arg === "--fps") {
      parsed.fps = Number(argv[++i]);
      if (!Number.isFinite(parsed.fps) || parsed.fps <= 0) {
        throw new UsageError("--fps must be a positive number");
      }
    } else if (arg.startsWith("--")) {
      throw new UsageError(`unknown option ${arg}`);
    } else {
      parsed.positional.push(arg);
    }
  }
  return parsed;
}

class UsageError extends Error {}

function usage(): string {
  return [
    "usage:",
    "  nldirac-plotkit panels  --out FIG.png [--component both|upper|lower] SNAP.csv...",
    "  nldirac-plotkit animate --out ANIM.gif [--fps N] [--component ...] DIR|SNAP.csv...",
  ].join("\n");
}

export function main(argv: string[]): number {
  try {
    const [command, ...rest] = argv;
    if (command !== "panels" && command !== "animate") {
      throw new UsageError(usage());
    }
    const args = parseArgs(rest);
    if (!args.out) {
      throw new UsageError("--out is required");
    }
    if (args.positional.length === 0) {
      throw new UsageError("no input snapshots given");
    }
    if (command === "panels") {
      const result = renderPanels({
        snapshotPaths: args.positional,
        component: args.component,
        outputPath: args.out,
      });
      console.log(
        `wrote ${args.out} (${result.plan.width}x${result.plan.height}, ` +
          `${result.plan.panels.length} panels)`,
      );
    } else {
      const source =
        args.positional.length === 1 && fs.existsSync(args.positional[0]) &&
        fs.statSync(args.positional[0]).isDirectory()
          ? args.positional[0]
          : args.positional;
      const result = renderAnimation({
        source,
        outputPath: args.out,
        framesPerSecond: args.fps,
        component: args.component,
      });
      console.log(
        `wrote ${args.out} (${result.frameCount} frames at ` +
          `${1000 / result.delayMs} fps)`,
      );
    }
    return 0;
  } catch (err) {
    if (err instanceof UsageError) {
      console.error(err.message);
      return 1;
    }
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    return 2;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
