"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │          TASK QUEUE                 │
 *  └─────────────────────────────────────┘
 *  In-memory queue of harness simulation tasks
 *
 *  Holds the (protocol, seed) runs of one experiment and tracks
 *  their lifecycle while the worker pool drains it.
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - TaskQueue instance
 *
 *  Notes:
 *  - FIFO order; tasks keep their insertion index so results
 *    can be merged deterministically
 *  - One queue per experiment, nothing shared between runs
 */
"""

import asyncio
import uuid
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional

from core.models import TaskName, TaskStatus
from debugger import debug_error


@dataclass
class SimulationTask:
    """Task structure for queue"""
    task_type: str
    payload: Dict[str, Any]
    index: int = 0
    id: str = field(default_factory=lambda: str(uuid.uuid4()))
    status: TaskStatus = TaskStatus.PENDING
    created_at: datetime = field(default_factory=datetime.now)
    started_at: Optional[datetime] = None
    completed_at: Optional[datetime] = None
    result: Any = None
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Task metadata for diagnostics"""
        return {
            'id': self.id,
            'task_type': self.task_type,
            'index': self.index,
            'status': self.status.value,
            'created_at': self.created_at.isoformat(),
            'started_at': self.started_at.isoformat() if self.started_at else None,
            'completed_at': self.completed_at.isoformat() if self.completed_at else None,
            'error': self.error
        }


class TaskQueue:
    """
     ┌─────────────────────────────────────┐
     │         TASKQUEUE                   │
     └─────────────────────────────────────┘
     FIFO task queue with lifecycle tracking

     get_next_task is guarded by an asyncio lock so several
     workers can pull from the same queue.
    """

    def __init__(self):
        self._tasks: Dict[str, SimulationTask] = {}
        self._pending: List[str] = []
        self._lock: Optional[asyncio.Lock] = None

    def add_task(self, task_type: str, payload: Dict[str, Any]) -> str:
        """
         ┌─────────────────────────────────────┐
         │            ADD_TASK                 │
         └─────────────────────────────────────┘
         Add a new task to the queue

         Parameters:
         - task_type: TaskName value
         - payload: keyword arguments for the handler

         Returns:
         - Task id
        """
        task = SimulationTask(task_type=task_type, payload=payload, index=len(self._tasks))
        self._tasks[task.id] = task
        self._pending.append(task.id)
        return task.id

    def add_simulation(self, payload: Dict[str, Any]) -> str:
        return self.add_task(TaskName.SIMULATION_RUN.value, payload)

    async def get_next_task(self) -> Optional[SimulationTask]:
        """Pop the oldest pending task and mark it processing"""
        if self._lock is None:
            self._lock = asyncio.Lock()
        async with self._lock:
            if not self._pending:
                return None
            task = self._tasks[self._pending.pop(0)]
            task.status = TaskStatus.PROCESSING
            task.started_at = datetime.now()
            return task

    def complete_task(self, task_id: str, result: Any) -> None:
        task = self._tasks[task_id]
        task.status = TaskStatus.COMPLETED
        task.completed_at = datetime.now()
        task.result = result

    def fail_task(self, task_id: str, error: str) -> None:
        task = self._tasks[task_id]
        task.status = TaskStatus.FAILED
        task.completed_at = datetime.now()
        task.error = error
        debug_error(f"Task {task.index} ({task.task_type}) failed: {error}")

    def get_task(self, task_id: str) -> Optional[SimulationTask]:
        return self._tasks.get(task_id)

    def tasks(self) -> List[SimulationTask]:
        """All tasks in insertion order"""
        return sorted(self._tasks.values(), key=lambda task: task.index)

    def failed_tasks(self) -> List[SimulationTask]:
        return [task for task in self.tasks() if task.status == TaskStatus.FAILED]

    @property
    def pending_count(self) -> int:
        return len(self._pending)

    def results(self) -> List[Any]:
        """Results of completed tasks in insertion order"""
        return [task.result for task in self.tasks() if task.status == TaskStatus.COMPLETED]
