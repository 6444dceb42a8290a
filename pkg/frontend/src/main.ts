// DOM entry point: wires the App controller to the static page in
// index.html. Everything semantic comes from the service; this file only
// renders state and forwards user gestures.

import { App, AppState } from './app.js'
import { FormtClient } from './api.js'
import { attachPanZoom, PanZoomHandle } from './panzoom.js'
import { legendEntries, sceneToSvg } from './scene.js'
import { TestFormError, buildTestRow } from './testform.js'
import { GROUPING_MODES, Grouping, Mutant } from './types.js'

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id)
  if (!el) throw new Error(`missing element #${id}`)
  return el as T
}

const specInput = byId<HTMLTextAreaElement>('spec')
const loadButton = byId<HTMLButtonElement>('load')
const groupingSelect = byId<HTMLSelectElement>('grouping')
const mapHost = byId<HTMLDivElement>('map')
const legendHost = byId<HTMLDivElement>('legend')
const banner = byId<HTMLDivElement>('banner')
const scoreLine = byId<HTMLDivElement>('score')
const testsBody = byId<HTMLTableSectionElement>('tests-body')
const assignInput = byId<HTMLInputElement>('assign')
const expectInput = byId<HTMLInputElement>('expect')
const addButton = byId<HTMLButtonElement>('add-test')
const evaluateButton = byId<HTMLButtonElement>('evaluate')
const clearButton = byId<HTMLButtonElement>('clear-tests')
const tooltip = byId<HTMLDivElement>('tooltip')

for (const mode of GROUPING_MODES) {
  const option = document.createElement('option')
  option.value = mode
  option.textContent = mode
  groupingSelect.appendChild(option)
}

const app = new App(new FormtClient(''), render)
let panZoom: PanZoomHandle | null = null
let renderedScene: string | null = null
const logicCache = new Map<string, string>()

function mutantById(state: AppState, id: string): Mutant | undefined {
  return state.report?.mutants.find((m) => m.id === id)
}

function renderBanner(state: AppState): void {
  const messages: string[] = []
  if (state.connectionLost) messages.push('Connection to the formt service lost.')
  if (state.sceneError) messages.push(`Malformed scene: ${state.sceneError}`)
  if (state.capOverflow) messages.push('Variable cap exceeded: some outcomes are unknown.')
  if (state.lastError) messages.push(state.lastError)
  banner.textContent = messages.join(' ')
  banner.classList.toggle('hidden', messages.length === 0)
  banner.classList.toggle('error', state.connectionLost || state.sceneError !== null)
}

function renderMap(state: AppState): void {
  if (!state.scene) {
    mapHost.innerHTML = state.sceneError
      ? `<div class="error-panel">Scene could not be drawn: ${state.sceneError}</div>`
      : ''
    renderedScene = null
    return
  }
  const markup = sceneToSvg(state.scene)
  if (markup !== renderedScene) {
    renderedScene = markup
    panZoom?.dispose()
    mapHost.innerHTML = markup
    const svg = mapHost.querySelector('svg') as SVGSVGElement
    panZoom = attachPanZoom(svg, state.scene.width, state.scene.height)
  }
  legendHost.innerHTML = legendEntries(state.scene)
    .map((name) => `<span class="legend-item"><i class="swatch fill-${name}"></i>${name}</span>`)
    .join('')
}

function renderTests(state: AppState): void {
  testsBody.innerHTML = ''
  const failing = new Set(state.originFailures)
  state.tests.forEach((test) => {
    const row = document.createElement('tr')
    const warn = test.id && failing.has(test.id)
    row.innerHTML =
      `<td>${test.id ?? ''}${warn ? ' <span class="badge" title="disagrees with the origin">!</span>' : ''}</td>` +
      `<td>${Object.entries(test.assign)
        .map(([name, value]) => `${name}=${value}`)
        .join(' ')}</td>` +
      `<td>${String(test.expect)}</td>`
    testsBody.appendChild(row)
  })
}

function render(state: AppState): void {
  renderBanner(state)
  renderMap(state)
  renderTests(state)
  evaluateButton.disabled = state.evaluating || !state.summary
  addButton.disabled = state.evaluating || !state.summary
  clearButton.disabled = state.evaluating || !state.summary
  if (state.report) {
    scoreLine.textContent =
      `score ${state.report.mutationScore.toFixed(3)} — ` +
      `${state.report.trueCount} true, ${state.report.equivalentCount} equivalent, ` +
      `${state.report.unknownCount} unknown, ${state.report.testsTotal} tests`
  } else if (state.summary) {
    scoreLine.textContent = `${state.summary.simplified} — ${state.summary.mutantCount} mutants, not evaluated yet`
  } else {
    scoreLine.textContent = ''
  }
}

loadButton.addEventListener('click', () => {
  void app.loadProject(specInput.value)
})

groupingSelect.addEventListener('change', () => {
  void app.setGrouping(groupingSelect.value as Grouping)
})

addButton.addEventListener('click', () => {
  try {
    const row = buildTestRow(`t${app.state.tests.length + 1}`, assignInput.value, expectInput.value)
    void app.addTest(row)
  } catch (error) {
    if (error instanceof TestFormError) {
      banner.textContent = error.message
      banner.classList.remove('hidden')
    } else {
      throw error
    }
  }
})

evaluateButton.addEventListener('click', () => {
  void app.evaluate()
})

clearButton.addEventListener('click', () => {
  void app.replaceTests([])
})

mapHost.addEventListener('mousemove', (event) => {
  const target = (event.target as Element | null)?.closest('[data-path]')
  if (!target) {
    tooltip.classList.add('hidden')
    return
  }
  const path = target.getAttribute('data-path') ?? ''
  const mutantId = target.getAttribute('data-mutant')
  const lines: string[] = [`path ${path}`]
  const logic = logicCache.get(path)
  if (logic !== undefined) {
    lines.push(logic)
  } else {
    void app.nodeLogic(path).then((answer) => {
      if (answer !== null) logicCache.set(path, answer)
    })
  }
  if (mutantId) {
    const mutant = mutantById(app.state, mutantId)
    if (mutant) {
      lines.push(`${mutant.id} (${mutant.operator}) ${mutant.status} → ${mutant.form}`)
      if (mutant.info) {
        lines.push(
          `${mutant.info.killed ? 'killed' : 'not killed'}, ` +
            `${(mutant.info.percentFailing * 100).toFixed(0)}% of tests failing`,
        )
      }
    }
  }
  tooltip.textContent = lines.join('\n')
  tooltip.style.left = `${event.clientX + 12}px`
  tooltip.style.top = `${event.clientY + 12}px`
  tooltip.classList.remove('hidden')
})

mapHost.addEventListener('mouseleave', () => tooltip.classList.add('hidden'))

render(app.state)
