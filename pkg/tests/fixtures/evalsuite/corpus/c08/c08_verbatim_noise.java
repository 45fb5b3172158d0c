ingest(importFile);
try {
    audit(importFile);
} catch (FileNotFoundException ignored) {
}
int feed = 0;
