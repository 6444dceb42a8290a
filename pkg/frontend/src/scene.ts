import type { SceneGraph, Shape } from './types.js'

/** Raised when /scene returns something that is not a scene graph. */
export class SceneFormatError extends Error {
  constructor(message: string) {
    super(message)
    this.name = 'SceneFormatError'
  }
}

const SHAPE_KINDS = new Set(['rootFrame', 'mark', 'atomLabel', 'wrapAnnotation'])

function isFiniteNumber(value: unknown): value is number {
  return typeof value === 'number' && Number.isFinite(value)
}

function checkShape(raw: unknown, index: number): Shape {
  const where = `shapes[${index}]`
  if (typeof raw !== 'object' || raw === null) {
    throw new SceneFormatError(`${where} is not an object`)
  }
  const shape = raw as Record<string, unknown>
  if (typeof shape.id !== 'string') throw new SceneFormatError(`${where}.id missing`)
  if (typeof shape.path !== 'string') throw new SceneFormatError(`${where}.path missing`)
  if (typeof shape.kind !== 'string' || !SHAPE_KINDS.has(shape.kind)) {
    throw new SceneFormatError(`${where}.kind unrecognized: ${String(shape.kind)}`)
  }
  const geometry = shape.geometry as Record<string, unknown> | undefined
  for (const field of ['x', 'y', 'width', 'height']) {
    if (!geometry || !isFiniteNumber(geometry[field])) {
      throw new SceneFormatError(`${where}.geometry.${field} is not a number`)
    }
  }
  const style = shape.style as Record<string, unknown> | undefined
  for (const field of ['strokeKind', 'fillClass', 'shapeClass']) {
    if (!style || typeof style[field] !== 'string') {
      throw new SceneFormatError(`${where}.style.${field} missing`)
    }
  }
  return raw as Shape
}

/** Validate a server payload as a SceneGraph, throwing SceneFormatError
 * with a pointer to the first offending field. */
export function validateScene(data: unknown): SceneGraph {
  if (typeof data !== 'object' || data === null) {
    throw new SceneFormatError('scene payload is not an object')
  }
  const scene = data as Record<string, unknown>
  if (typeof scene.grouping !== 'string') throw new SceneFormatError('scene.grouping missing')
  if (!isFiniteNumber(scene.width) || !isFiniteNumber(scene.height)) {
    throw new SceneFormatError('scene.width/height are not numbers')
  }
  if (!Array.isArray(scene.shapes)) throw new SceneFormatError('scene.shapes is not an array')
  scene.shapes.forEach(checkShape)
  return data as SceneGraph
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;')
}

function num(value: number): string {
  return value.toFixed(2)
}

function shapeMarkup(shape: Shape): string {
  const { x, y, width, height } = shape.geometry
  const classes = `kind-${shape.kind} fill-${shape.style.fillClass} stroke-${shape.style.strokeKind}`
  const common =
    ` class="${classes}" data-path="${escapeXml(shape.path)}"` +
    (shape.mutantRef ? ` data-mutant="${escapeXml(shape.mutantRef)}"` : '')
  const title = shape.tooltip ? `<title>${escapeXml(shape.tooltip)}</title>` : ''
  let body: string
  if (shape.style.shapeClass === 'ellipse') {
    const cx = num(x + width / 2)
    const cy = num(y + height / 2)
    body = `<ellipse id="${shape.id}" cx="${cx}" cy="${cy}" rx="${num(width / 2)}" ry="${num(height / 2)}"${common}>${title}</ellipse>`
  } else {
    body = `<rect id="${shape.id}" x="${num(x)}" y="${num(y)}" width="${num(width)}" height="${num(height)}" rx="6"${common}>${title}</rect>`
  }
  if (shape.kind === 'atomLabel' && shape.label !== undefined) {
    const tx = num(x + width / 2)
    const ty = num(y + height / 2)
    body += `<text x="${tx}" y="${ty}" class="atom-text" text-anchor="middle" dominant-baseline="central">${escapeXml(shape.label)}</text>`
  }
  return body
}

/** Build a full <svg> element string for a scene. Geometry comes straight
 * from the server; the client contributes only CSS classes and data-*
 * attributes for hit testing. */
export function sceneToSvg(scene: SceneGraph): string {
  const parts = scene.shapes.map(shapeMarkup)
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${num(scene.width)} ${num(scene.height)}"` +
    ` data-grouping="${escapeXml(scene.grouping)}">${parts.join('')}</svg>`
  )
}

/** Shapes that carry a mutant reference, keyed by mutant id. */
export function mutantShapes(scene: SceneGraph): Map<string, Shape> {
  const out = new Map<string, Shape>()
  for (const shape of scene.shapes) {
    if (shape.mutantRef && !out.has(shape.mutantRef)) out.set(shape.mutantRef, shape)
  }
  return out
}

/** Legend entries for the fill classes the current scene actually uses,
 * in a stable order. */
export function legendEntries(scene: SceneGraph): string[] {
  const order = ['killed', 'notKilled', 'equivalent', 'unknown', 'none']
  const used = new Set(scene.shapes.map((shape) => shape.style.fillClass))
  return order.filter((name) => used.has(name))
}
