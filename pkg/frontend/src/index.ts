export { InputError, readTable, pivotLong, asMatrix, isWideMatrix } from "./csv.js";
export type { Table, Matrix } from "./csv.js";
export { plotTimeseries } from "./timeseries.js";
export type { TimeseriesJob } from "./timeseries.js";
export { plotSurface } from "./surface.js";
export type { SurfaceJob } from "./surface.js";
export { plotContour } from "./contour.js";
export type { ContourJob } from "./contour.js";
export { labelFor } from "./manifest.js";
export { main, EXIT_OK, EXIT_ERROR, EXIT_INPUT } from "./cli.js";
