"""Anomaly detection in univariate time series with time-evolving graphs.

The heavy lifting lives in the compiled ``_core`` module; ``TEGDetector``
wraps it with the familiar build/predict workflow.
"""

import os

from ._core import (  # noqa: F401
    RESULTS_HEADER,
    ConfusionMatrix,
    DataError,
    DetectionOutcome,
    DetectorParams,
    Discretizer,
    Error,
    FormatError,
    Graph,
    InvalidArgument,
    Model,
    TimeSeries,
    VersionError,
    accuracy,
    build_model,
    compute_confusion_matrix,
    discover_tegs,
    dissimilarity,
    generate_graph,
    global_graph,
    list_metrics,
    load_dataset,
    load_model,
    predict,
    resize,
    save_model,
    sum_graphs,
    threshold,
    vectorize,
)

N_BINS = 30
N_OBS_PER_PERIOD = 336
ALPHA = 5


class TEGDetector:
    """One detector variant: a metric plus its discretization, epoch and alpha settings."""

    def __init__(self, metric, n_bins=N_BINS, n_obs_per_period=N_OBS_PER_PERIOD, alpha=ALPHA):
        self.params = DetectorParams(metric, n_bins, n_obs_per_period, alpha)

    def get_dataset(self, ds_path):
        return load_dataset(ds_path)

    def build_model(self, training_dataset):
        model = build_model(training_dataset, self.params)
        return model, model.time_to_build

    def predict(self, testing_dataset, model):
        out = predict(model, testing_dataset)
        return list(out.outliers), out.n_periods, out.time_to_predict

    def compute_confusion_matrix(self, ground_true, predictions):
        cm = compute_confusion_matrix([int(x) for x in ground_true], [int(x) for x in predictions])
        return cm.as_dict()

    def print_metrics(self, detector, testing_set, perf, cm):
        print("Detector:\t\t\t", detector["metric"])
        print("N_bins:\t\t\t", detector["n_bins"])
        print("N_obs_per_period:\t\t", detector["n_obs_per_period"])
        print("Alpha:\t\t\t", detector["alpha"])
        print("Testing set:\t\t\t", testing_set)
        print("Time to build the model:\t", perf["tmc"], "seconds")
        print("Time to make prediction:\t", perf["tmp"], "seconds")
        print("Confusion matrix:\t\n", cm)

    def metrics_to_csv(self, detector, testing_set, perf, cm, results_csv_path):
        new_file = not os.path.exists(results_csv_path) or os.path.getsize(results_csv_path) == 0
        row = [
            detector["metric"], detector["n_bins"], detector["n_obs_per_period"], detector["alpha"],
            testing_set, repr(float(perf["tmc"])), repr(float(perf["tmp"])),
            cm["tp"], cm["tn"], cm["fp"], cm["fn"],
        ]
        with open(results_csv_path, "a", encoding="utf-8") as f:
            if new_file:
                f.write(RESULTS_HEADER + "\n")
            f.write(",".join(str(x) for x in row) + "\n")
