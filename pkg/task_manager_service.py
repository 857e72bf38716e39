"""
Task Manager Service - petpatch
Distribui tarefas independentes dos levantamentos entre processos,
preservando a ordem de submissão no resultado
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Optional, Sequence

from logging_system import get_logger

logger = get_logger(__name__)


class TaskManager:
    """Executor de tarefas puras, em linha ou num pool de processos"""

    def __init__(self, jobs: int = 1):
        self.jobs = max(1, int(jobs or 1))

    def map(self, func: Callable[[Any], Any], payloads: Sequence[Any], labels: Optional[Sequence[str]] = None) -> List[Any]:
        """Aplica func a cada payload; o resultado segue a ordem dos payloads"""
        labels = list(labels) if labels is not None else [str(k) for k in range(len(payloads))]

        if self.jobs <= 1 or len(payloads) <= 1:
            results = []
            for task_id, payload in zip(labels, payloads):
                results.append(self._run_inline(func, payload, task_id))
            return results

        logger.info(f"Distribuindo {len(payloads)} tarefas em {self.jobs} processos")
        with ProcessPoolExecutor(max_workers=self.jobs) as pool:
            futures = [pool.submit(func, payload) for payload in payloads]

            results, first_error = [], None
            for task_id, future in zip(labels, futures):
                try:
                    results.append(future.result())
                    logger.debug(f"Tarefa {task_id} concluída", extra={"task_id": task_id})
                except Exception as e:
                    logger.error(f"Erro na tarefa {task_id}: {e}", extra={"task_id": task_id})
                    results.append(None)
                    if first_error is None:
                        first_error = e

        if first_error is not None:
            raise first_error
        return results

    @staticmethod
    def _run_inline(func: Callable[[Any], Any], payload: Any, task_id: str) -> Any:
        logger.debug(f"Iniciando tarefa {task_id}", extra={"task_id": task_id})
        try:
            result = func(payload)
        except Exception as e:
            logger.error(f"Erro na tarefa {task_id}: {e}", extra={"task_id": task_id})
            raise
        logger.debug(f"Tarefa {task_id} concluída", extra={"task_id": task_id})
        return result
