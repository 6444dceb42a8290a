import type {
  Grouping,
  KillReport,
  Mutant,
  NodeLogic,
  ProjectSummary,
  SceneGraph,
  TestRow,
  TestsResponse,
} from './types.js'

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>

/** Error envelope the service returns: {"error": {code, message, detail}}. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly detail: unknown = null,
  ) {
    super(message)
    this.name = 'ApiError'
  }
}

export interface EvaluateResult {
  report: KillReport
  /** true when the service answered 422 because the variable cap forced
   * Unknown outcomes; the body still carries the full report. */
  capOverflow: boolean
}

async function errorFrom(response: Response): Promise<ApiError> {
  let body: unknown = null
  try {
    body = await response.json()
  } catch {
    // non-JSON error body; fall through to the generic message
  }
  const err = (body as { error?: { code?: string; message?: string; detail?: unknown } } | null)
    ?.error
  return new ApiError(
    response.status,
    err?.code ?? 'HttpError',
    err?.message ?? `HTTP ${response.status}`,
    err?.detail ?? null,
  )
}

export class FormtClient {
  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async send(method: string, path: string, body?: string, contentType?: string): Promise<Response> {
    const init: RequestInit = { method }
    if (body !== undefined) {
      init.body = body
      init.headers = { 'Content-Type': contentType ?? 'application/json' }
    }
    return this.fetchImpl(this.baseUrl + path, init)
  }

  private async json<T>(method: string, path: string, body?: string, contentType?: string): Promise<T> {
    const response = await this.send(method, path, body, contentType)
    if (!response.ok) throw await errorFrom(response)
    return (await response.json()) as T
  }

  createProject(spec: string): Promise<ProjectSummary> {
    return this.json('POST', '/project', spec, 'text/plain')
  }

  getMutants(): Promise<{ mutants: Mutant[] }> {
    return this.json('GET', '/mutants')
  }

  replaceTests(tests: TestRow[]): Promise<TestsResponse> {
    return this.json('PUT', '/tests', JSON.stringify({ tests }))
  }

  addTest(test: TestRow): Promise<TestsResponse> {
    return this.json('POST', '/tests', JSON.stringify(test))
  }

  async evaluate(): Promise<EvaluateResult> {
    const response = await this.send('POST', '/evaluate')
    if (response.ok) {
      return { report: (await response.json()) as KillReport, capOverflow: false }
    }
    if (response.status === 422) {
      // the 422 body is the report itself when Unknown outcomes are present
      const body = (await response.clone().json().catch(() => null)) as KillReport | null
      if (body && Array.isArray((body as KillReport).mutants)) {
        return { report: body, capOverflow: true }
      }
    }
    throw await errorFrom(response)
  }

  getScene(grouping?: Grouping): Promise<SceneGraph> {
    const query = grouping ? `?grouping=${encodeURIComponent(grouping)}` : ''
    return this.json('GET', `/scene${query}`)
  }

  getNodeLogic(path: string): Promise<NodeLogic> {
    return this.json('GET', `/node/${encodeURIComponent(path)}/logic`)
  }
}
