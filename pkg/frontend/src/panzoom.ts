// viewBox arithmetic for wheel zoom and drag pan. The pure functions are
// unit-tested; attachPanZoom is the thin DOM binding around them.

export interface ViewBox {
  x: number
  y: number
  width: number
  height: number
}

export function fitViewBox(sceneWidth: number, sceneHeight: number): ViewBox {
  return { x: 0, y: 0, width: sceneWidth, height: sceneHeight }
}

export function viewBoxAttr(vb: ViewBox): string {
  return [vb.x, vb.y, vb.width, vb.height].map((v) => v.toFixed(2)).join(' ')
}

const MIN_SCALE = 1 / 64
const MAX_SCALE = 64

/** Zoom by `factor` (> 1 zooms in) keeping the scene point (px, py) fixed
 * under the cursor. The zoom level is clamped relative to the fitted view. */
export function zoomViewBox(vb: ViewBox, factor: number, px: number, py: number, fitted: ViewBox): ViewBox {
  let width = vb.width / factor
  width = Math.min(Math.max(width, fitted.width * MIN_SCALE), fitted.width / MIN_SCALE)
  width = Math.max(width, fitted.width / MAX_SCALE)
  const scale = vb.width / width
  return {
    x: px - (px - vb.x) / scale,
    y: py - (py - vb.y) / scale,
    width,
    height: vb.height * (width / vb.width),
  }
}

/** Pan by a delta expressed in scene units. */
export function panViewBox(vb: ViewBox, dx: number, dy: number): ViewBox {
  return { ...vb, x: vb.x + dx, y: vb.y + dy }
}

/** Convert a client-pixel point to scene coordinates for the given svg. */
export function clientToScene(svg: SVGSVGElement, vb: ViewBox, clientX: number, clientY: number): { x: number; y: number } {
  const bounds = svg.getBoundingClientRect()
  const unitsPerPixel = vb.width / bounds.width
  return {
    x: vb.x + (clientX - bounds.left) * unitsPerPixel,
    y: vb.y + (clientY - bounds.top) * unitsPerPixel,
  }
}

export interface PanZoomHandle {
  reset(sceneWidth: number, sceneHeight: number): void
  dispose(): void
}

/** Wire wheel-zoom and drag-pan onto an <svg> element by mutating its
 * viewBox attribute. */
export function attachPanZoom(svg: SVGSVGElement, sceneWidth: number, sceneHeight: number): PanZoomHandle {
  let fitted = fitViewBox(sceneWidth, sceneHeight)
  let vb = { ...fitted }
  let dragging = false
  let lastX = 0
  let lastY = 0

  const apply = () => svg.setAttribute('viewBox', viewBoxAttr(vb))
  apply()

  const onWheel = (event: WheelEvent) => {
    event.preventDefault()
    const factor = event.deltaY < 0 ? 1.25 : 0.8
    const point = clientToScene(svg, vb, event.clientX, event.clientY)
    vb = zoomViewBox(vb, factor, point.x, point.y, fitted)
    apply()
  }
  const onMouseDown = (event: MouseEvent) => {
    dragging = true
    lastX = event.clientX
    lastY = event.clientY
  }
  const onMouseMove = (event: MouseEvent) => {
    if (!dragging) return
    const bounds = svg.getBoundingClientRect()
    const unitsPerPixel = vb.width / bounds.width
    vb = panViewBox(vb, (lastX - event.clientX) * unitsPerPixel, (lastY - event.clientY) * unitsPerPixel)
    lastX = event.clientX
    lastY = event.clientY
    apply()
  }
  const onMouseUp = () => {
    dragging = false
  }

  svg.addEventListener('wheel', onWheel, { passive: false })
  svg.addEventListener('mousedown', onMouseDown)
  window.addEventListener('mousemove', onMouseMove)
  window.addEventListener('mouseup', onMouseUp)

  return {
    reset(newWidth: number, newHeight: number) {
      fitted = fitViewBox(newWidth, newHeight)
      vb = { ...fitted }
      apply()
    },
    dispose() {
      svg.removeEventListener('wheel', onWheel)
      svg.removeEventListener('mousedown', onMouseDown)
      window.removeEventListener('mousemove', onMouseMove)
      window.removeEventListener('mouseup', onMouseUp)
    },
  }
}
