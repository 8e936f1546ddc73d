/* tslint:disable */
/* eslint-disable */

/**
 * Support and Newton polytope statistics as pretty JSON.
 */
export function analyze(text: string): string;

/**
 * Certificate trace as pretty JSON.
 */
export function certify(text: string, enable_box: boolean, enable_simplex_search: boolean): string;

/**
 * Bundled examples as a JSON object from file name to polynomial text.
 */
export function examples(): string;

/**
 * SVG of the negative region on [-half_width, half_width]² in log
 * coordinates next to the signed support. `lines` holds "v1,v2,a" entries
 * separated by ';' or newlines.
 */
export function plot(text: string, half_width: number, resolution: number, lines: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly analyze: (a: number, b: number) => [number, number, number, number];
    readonly certify: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly examples: () => [number, number];
    readonly plot: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
