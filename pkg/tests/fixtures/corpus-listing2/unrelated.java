Connection db = DriverManager.getConnection(cfg);
try {
    Statement s = db.createStatement();
    s.executeUpdate(sql);
} catch (SQLException sqle) {
    rollback(db, sqle);
}
