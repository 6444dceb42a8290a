import { ApiError, FormtClient } from './api.js'
import { SceneFormatError, validateScene } from './scene.js'
import type { Grouping, KillReport, ProjectSummary, SceneGraph, TestRow } from './types.js'

export interface AppState {
  summary: ProjectSummary | null
  tests: TestRow[]
  report: KillReport | null
  scene: SceneGraph | null
  grouping: Grouping
  /** true while a /evaluate round trip is in flight; at most one at a time */
  evaluating: boolean
  connectionLost: boolean
  sceneError: string | null
  /** ids of tests that disagree with the origin (server-side validation) */
  originFailures: string[]
  /** the last evaluation hit the variable cap; some outcomes are unknown */
  capOverflow: boolean
  lastError: string | null
}

export type Listener = (state: AppState) => void

function initialState(): AppState {
  return {
    summary: null,
    tests: [],
    report: null,
    scene: null,
    grouping: 'document',
    evaluating: false,
    connectionLost: false,
    sceneError: null,
    originFailures: [],
    capOverflow: false,
    lastError: null,
  }
}

/** Application controller: owns the state, talks to the service, and
 * notifies the view after every transition. All logic semantics stay on
 * the server; this class only sequences requests. */
export class App {
  readonly state: AppState = initialState()

  constructor(
    private readonly api: FormtClient,
    private readonly listener: Listener = () => {},
  ) {}

  private emit(): void {
    this.listener(this.state)
  }

  private fail(error: unknown): void {
    if (error instanceof ApiError) {
      this.state.lastError = `${error.code}: ${error.message}`
    } else if (error instanceof SceneFormatError) {
      this.state.sceneError = error.message
    } else {
      // fetch rejected before reaching the service
      this.state.connectionLost = true
    }
  }

  async loadProject(spec: string): Promise<boolean> {
    this.state.lastError = null
    try {
      const summary = await this.api.createProject(spec)
      Object.assign(this.state, initialState(), { summary })
      await this.refreshScene()
      this.emit()
      return true
    } catch (error) {
      this.fail(error)
      this.emit()
      return false
    }
  }

  async setGrouping(grouping: Grouping): Promise<void> {
    this.state.grouping = grouping
    try {
      await this.refreshScene()
    } catch (error) {
      this.fail(error)
    }
    this.emit()
  }

  /** Add one test row, then re-evaluate and re-fetch the scene. */
  async addTest(test: TestRow): Promise<boolean> {
    this.state.lastError = null
    try {
      const response = await this.api.addTest(test)
      this.state.tests.push(test)
      this.state.originFailures = response.originFailures
      this.state.connectionLost = false
    } catch (error) {
      this.fail(error)
      this.emit()
      return false
    }
    return this.evaluate()
  }

  /** Replace the whole test base (an empty list clears it), then
   * re-evaluate. */
  async replaceTests(tests: TestRow[]): Promise<boolean> {
    this.state.lastError = null
    try {
      const response = await this.api.replaceTests(tests)
      this.state.tests = [...tests]
      this.state.originFailures = response.originFailures
      this.state.connectionLost = false
    } catch (error) {
      this.fail(error)
      this.emit()
      return false
    }
    return this.evaluate()
  }

  /** Run the kill analysis. Returns false (without a request) when an
   * evaluation is already in flight. */
  async evaluate(): Promise<boolean> {
    if (this.state.evaluating) return false
    this.state.evaluating = true
    this.state.lastError = null
    this.emit()
    try {
      const { report, capOverflow } = await this.api.evaluate()
      this.state.report = report
      this.state.capOverflow = capOverflow
      this.state.originFailures = report.originFailures
      this.state.connectionLost = false
      await this.refreshScene()
      return true
    } catch (error) {
      this.fail(error)
      return false
    } finally {
      this.state.evaluating = false
      this.emit()
    }
  }

  async nodeLogic(path: string): Promise<string | null> {
    try {
      const answer = await this.api.getNodeLogic(path)
      return answer.logic
    } catch (error) {
      this.fail(error)
      this.emit()
      return null
    }
  }

  private async refreshScene(): Promise<void> {
    const payload = await this.api.getScene(this.state.grouping)
    try {
      this.state.scene = validateScene(payload)
      this.state.sceneError = null
      this.state.connectionLost = false
    } catch (error) {
      this.state.scene = null
      this.state.sceneError =
        error instanceof SceneFormatError ? error.message : String(error)
    }
  }
}
