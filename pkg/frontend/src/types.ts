// JSON shapes exchanged with the formt HTTP service. These mirror the
// server's wire format exactly; the client never computes logic semantics
// itself, it only styles and arranges what the server sends.

export interface Geometry {
  x: number
  y: number
  width: number
  height: number
}

export type StrokeKind = 'solid' | 'dashed'
export type ShapeClass = 'rectangle' | 'ellipse'
export type ShapeKind = 'rootFrame' | 'mark' | 'atomLabel' | 'wrapAnnotation'

export interface ShapeStyle {
  strokeKind: StrokeKind
  fillClass: string
  shapeClass: ShapeClass
}

export interface Shape {
  id: string
  path: string
  kind: ShapeKind
  geometry: Geometry
  style: ShapeStyle
  label?: string
  tooltip?: string
  mutantRef?: string
}

export interface SceneGraph {
  grouping: string
  width: number
  height: number
  shapes: Shape[]
}

export interface MutantInfo {
  testsTotal: number
  testsFailing: number
  percentFailing: number
  killed: boolean
  failingTestIds: string[]
  unknownTestIds: string[]
}

export interface Mutant {
  id: string
  operator: 'delete' | 'wrap'
  path: string
  form: string
  status: 'true' | 'equivalent' | 'unknown'
  info?: MutantInfo | null
}

export interface KillReport {
  origin: string
  simplified: string
  mutationScore: number
  trueCount: number
  equivalentCount: number
  unknownCount: number
  testsTotal: number
  originFailures: string[]
  mutants: Mutant[]
}

/** One row of the flat test table. A total assignment expects a boolean;
 * a partial one expects a residual expression, passed through verbatim. */
export interface TestRow {
  id?: string
  assign: Record<string, boolean>
  expect: boolean | string
}

export interface NodeRef {
  path: string
  kind: string
}

export interface ProjectSummary {
  translated: string
  simplified: string
  base: string
  nodes: NodeRef[]
  mutantCount: number
  testCount: number
}

export interface TestsResponse {
  tests: number
  originFailures: string[]
}

export interface NodeLogic {
  path: string
  logic: string
}

export const GROUPING_MODES = [
  'document',
  'byVariables',
  'byDepth',
  'byKillSector',
  'byKillCount',
] as const

export type Grouping = (typeof GROUPING_MODES)[number]
