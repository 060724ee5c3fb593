"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │          TASK WORKER                │
 *  └─────────────────────────────────────┘
 *  Workers that drain a TaskQueue
 *
 *  Each worker pulls tasks until the queue is empty; with more
 *  than one worker the simulations run in a process pool.
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - TaskWorker, WorkerPool
 *
 *  Notes:
 *  - A failing task is marked FAILED, other tasks continue
 *  - Results stay keyed by task insertion order, so the worker
 *    count never changes experiment output
 */
"""

import asyncio
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Callable, Dict, List, Optional

from config import TASK_WORKER_COUNT
from debugger import debug_info, debug_success

from .handlers import HANDLERS
from .queue import SimulationTask, TaskQueue


class TaskWorker:
    """
     ┌─────────────────────────────────────┐
     │         TASKWORKER                  │
     └─────────────────────────────────────┘
     Worker for processing tasks

     Runs handlers inline or on the shared executor.
    """

    def __init__(self, worker_id: int, queue: TaskQueue,
                 handlers: Dict[str, Callable], executor: Optional[Executor] = None):
        self.worker_id = worker_id
        self.queue = queue
        self.handlers = handlers
        self.executor = executor
        self.processed = 0

    async def process_task(self, task: SimulationTask) -> None:
        """
         ┌─────────────────────────────────────┐
         │        PROCESS_TASK                 │
         └─────────────────────────────────────┘
         Process a single task

         Parameters:
         - task: Task to process
        """
        try:
            handler = self.handlers.get(task.task_type)
            if not handler:
                raise ValueError(f"No handler registered for task type: {task.task_type}")

            if self.executor is None:
                result = handler(**task.payload)
            else:
                loop = asyncio.get_running_loop()
                result = await loop.run_in_executor(
                    self.executor, _call_handler, handler, task.payload
                )
            self.queue.complete_task(task.id, result)

        except Exception as e:
            self.queue.fail_task(task.id, str(e))

        finally:
            self.processed += 1

    async def run(self) -> None:
        """Process tasks until the queue is empty"""
        while True:
            task = await self.queue.get_next_task()
            if task is None:
                break
            await self.process_task(task)


def _call_handler(handler: Callable, payload: Dict) -> object:
    return handler(**payload)


class WorkerPool:
    """
     ┌─────────────────────────────────────┐
     │         WORKERPOOL                  │
     └─────────────────────────────────────┘
     Manages multiple workers

     worker_count == 1 runs every task in-process; larger
     counts share a ProcessPoolExecutor of that size.
    """

    def __init__(self, worker_count: int = TASK_WORKER_COUNT):
        if worker_count < 1:
            raise ValueError("worker_count must be >= 1")
        self.worker_count = worker_count
        self._handlers: Dict[str, Callable] = dict(HANDLERS)

    def register_handler(self, task_type: str, handler: Callable) -> None:
        """Register handler for all workers"""
        self._handlers[task_type] = handler

    async def run_all(self, queue: TaskQueue) -> None:
        """
         ┌─────────────────────────────────────┐
         │            RUN_ALL                  │
         └─────────────────────────────────────┘
         Drain the queue with worker_count workers
        """
        total = queue.pending_count
        executor = ProcessPoolExecutor(max_workers=self.worker_count) if self.worker_count > 1 else None
        workers: List[TaskWorker] = [
            TaskWorker(worker_id=i + 1, queue=queue, handlers=self._handlers, executor=executor)
            for i in range(self.worker_count)
        ]
        debug_info(f"Running {total} tasks on {self.worker_count} worker(s)")
        try:
            await asyncio.gather(*(worker.run() for worker in workers))
        finally:
            if executor is not None:
                executor.shutdown(wait=True)

        failed = len(queue.failed_tasks())
        if failed == 0:
            debug_success(f"Completed {total} tasks")

    def run(self, queue: TaskQueue) -> None:
        """Blocking wrapper around run_all"""
        asyncio.run(self.run_all(queue))
