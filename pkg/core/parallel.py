import logging
from multiprocessing import Pool


logger = logging.getLogger(__name__)



def run_tasks(worker, tasks, jobs=1):
    """
    Apply `worker` to every task and return the results in task order.

    With jobs > 1 the tasks are spread over a process pool; the worker must be a
    module-level function and every task must be picklable. Since results come back
    in task order, any reduction done by the caller is independent of `jobs`.
    """
    tasks = list(tasks)
    if jobs <= 1 or len(tasks) <= 1:
        return [worker(task) for task in tasks]

    processes = min(jobs, len(tasks))
    logger.debug("Running %d tasks on %d processes", len(tasks), processes)
    with Pool(processes=processes) as pool:
        return pool.map(worker, tasks)


def merge_histograms(histograms):
    """
    Sum a sequence of {value: count} dictionaries into one dictionary sorted by value.
    """
    merged = {}
    for histogram in histograms:
        for value, count in histogram.items():
            merged[value] = merged.get(value, 0) + count
    return dict(sorted(merged.items()))
